package lib;

public interface I0 {
    int f1 = 0;
    String m1();
    void m2(C1 a0);
}
