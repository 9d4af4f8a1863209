package cat;

public class Base {
    public Base() { }
}
