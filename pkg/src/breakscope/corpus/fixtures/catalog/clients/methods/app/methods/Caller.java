package app.methods;

import cat.Svc;

public class Caller {
    public void run(Svc svc) {
        svc.gone();
        svc.shy();
        svc.inst();
        Svc.util();
        int n = svc.size();
        svc.take(1);
    }
}
