package app.methods;

import cat.Svc;

public class MySvc extends Svc {
    @Override public void gone() { }
    @Override public void secret() { }
    public void fixed() { }
    @Override public void inst() { }
    public static void util() { }
    @Override public int size() { return 1; }
    @Override public void take(int x) { }
}
