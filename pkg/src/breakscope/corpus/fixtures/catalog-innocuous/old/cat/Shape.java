package cat;

public class Shape {
    public Shape() { }
}
