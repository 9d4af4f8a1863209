package cat;

public class Marker {
    public Marker() { }
}
