package app.ctors;

import cat.Gadget;
import cat.Widget;

public class Factory {
    public Object make() {
        Widget w = new Widget(3);
        return new Gadget();
    }
}
