package cat;

public interface Listener {
}
