package cat;

public abstract class Tmpl {
    public Tmpl() { }
    public abstract void hook();
}
