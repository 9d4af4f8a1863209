package cat;

public class Gadget {
    public Gadget() { }
}
