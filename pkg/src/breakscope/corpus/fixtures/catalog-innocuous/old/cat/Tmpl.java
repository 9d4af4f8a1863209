package cat;

public abstract class Tmpl {
    public Tmpl() { }
    public void hook() { }
}
