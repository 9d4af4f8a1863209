package cat;

public interface Listener {
    void fire();
}
