package cat;

public class Widget {
    public Widget() { }
    public Widget(int size) { }
}
