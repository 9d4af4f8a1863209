package cat;

public interface Marker {
}
