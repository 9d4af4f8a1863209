package cat;

public class Widget {
    public Widget() { }
}
