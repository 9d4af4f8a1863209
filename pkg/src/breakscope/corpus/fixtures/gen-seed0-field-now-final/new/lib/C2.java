package lib;

public class C2 extends C1 {
    public boolean f8;
    protected String f9;
    public boolean f10;
    public C2() { }
    public C2(int a0) { }
    public boolean m10(int a0) { return false; }
}
