package lib;

public class C3 extends C2 {
    public int f11;
    public int f12;
    public C3() { }
    public C3(int a0) { }
    public int m11(C0 a0) { return 0; }
}
