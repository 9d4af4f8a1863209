package cat;

public class Cfg {
    protected int shy;
    public final int fixed;
    public static int inst;
    public int util;
    public String size;
    public Cfg() { }
}
