package app.types;

public class ImplementsHidden implements cat.HiddenApi {
}
