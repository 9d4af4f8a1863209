package app.types;

import cat.Base;
import cat.Child;
import cat.Concrete;
import cat.Shape;

public class Shapes {
    public Base up(Child c) {
        Object k = new Concrete();
        Object s = new Shape();
        Base b = c;
        return (Base) c;
    }
}
