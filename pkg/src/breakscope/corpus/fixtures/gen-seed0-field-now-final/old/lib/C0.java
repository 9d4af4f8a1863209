package lib;

public class C0 {
    protected static I0 f3;
    public boolean f4;
    public C0() { }
    public C3 m4() { return null; }
    protected void m5() { }
    public int m6() { return 0; }
}
