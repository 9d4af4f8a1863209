package lib;

public interface I1 {
    int f2 = 0;
    String m3(C0 a0);
}
