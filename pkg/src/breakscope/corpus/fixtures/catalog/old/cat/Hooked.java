package cat;

public interface Hooked {
    void hook();
}
