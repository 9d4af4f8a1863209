package geo.shapes;

import geo.core.Point;
import geo.core.Unit;

@Deprecated
public abstract class Shape extends Base implements Drawable, Named {
    public static final int SIDES = 0;
    protected double scale = 1.0;
    private String label;
    Point origin;

    public Shape(String label) {
        this.label = label;
    }
    protected Shape() {
        this.label = "shape";
    }

    public abstract double area();
    public double area(Unit u) { return this.area(); }
    public double area(Unit u, double factor) { return factor; }
    public String[] tags(int n, char[][] seps) { return null; }
    static void reset() { }
}

interface Drawable extends Visible, geo.core.Sized {
    void draw(Point at);
    int LAYERS = 3;
}
