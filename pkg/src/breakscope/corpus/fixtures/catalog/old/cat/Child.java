package cat;

public class Child extends Base {
    public Child() { }
}
