package client0;

import lib.C0;
import lib.C1;
import lib.C2;
import lib.C3;
import lib.I0;

public class K0 extends lib.C1 {
    @Override public void m5() { }
    @Override public void m7(lib.C3 p0) { }
    public static void run5(C0 p0, C0 p1) {
        boolean v1 = new C2().f7;
        new C2().f7 = v1;
        new lib.C3().m10(new lib.C3(17).m6());
        C1 v2 = new lib.C3();
        boolean v3 = v2.f7;
        new C3().m10(47);
        C1 v4 = v2;
    }
    public static C0 run9(C0 p0, I0 p1) {
        boolean v6 = false;
        boolean v7 = false;
        new C3().m9().m9();
        C0 v8 = new C2();
        return p0;
    }
}
