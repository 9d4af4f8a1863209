package cat;

public abstract class Plugin {
    public Plugin() { }
}
