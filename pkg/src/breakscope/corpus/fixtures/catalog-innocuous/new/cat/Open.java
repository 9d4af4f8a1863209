package cat;

public final class Open {
    public Open() { }
}
