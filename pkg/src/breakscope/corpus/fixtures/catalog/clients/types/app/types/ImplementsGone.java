package app.types;

public class ImplementsGone implements cat.GoneApi {
}
