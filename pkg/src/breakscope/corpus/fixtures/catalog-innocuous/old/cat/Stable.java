package cat;

public class Stable {
    public int level;
    public Stable() { }
    public int read() { return level; }
}
