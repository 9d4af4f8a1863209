package cat;

public abstract class Concrete {
    public Concrete() { }
}
