package cat;

public class Cfg {
    public int gone;
    public int shy;
    public int fixed;
    public int inst;
    public static int util;
    public int size;
    public Cfg() { }
}
