package cat;

public class Open {
    public Open() { }
}
