package cat;

public interface Shape {
}
