package cat;

public class Svc {
    public Svc() { }
    protected void shy() { }
    private void secret() { }
    public final void fixed() { }
    public static void inst() { }
    public void util() { }
    public String size() { return ""; }
    public void take(String x) { }
}
