package cat;

public abstract class Plugin {
    public Plugin() { }
    public abstract void start();
}
