package lib;

public abstract class C1 extends C0 {
    public static String f5;
    protected static String f6;
    public final boolean f7;
    public C1() { }
    public void m7(C3 a0) { }
    protected int m8() { return 0; }
    public C3 m9() { return null; }
}
