package cat;

public interface HiddenApi {
}
