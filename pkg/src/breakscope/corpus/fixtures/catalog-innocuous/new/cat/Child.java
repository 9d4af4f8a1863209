package cat;

public class Child {
    public Child() { }
}
