package cat;

public class Svc {
    public Svc() { }
    public void gone() { }
    public void shy() { }
    public void secret() { }
    public void fixed() { }
    public void inst() { }
    public static void util() { }
    public int size() { return 0; }
    public void take(int x) { }
}
