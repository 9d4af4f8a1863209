package cat;

public class Concrete {
    public Concrete() { }
}
