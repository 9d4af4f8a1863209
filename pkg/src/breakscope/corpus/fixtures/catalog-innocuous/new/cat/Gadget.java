package cat;

public class Gadget {
    protected Gadget() { }
}
