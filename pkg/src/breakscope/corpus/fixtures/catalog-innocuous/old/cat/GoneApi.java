package cat;

public interface GoneApi {
}
