package app.types;

public class ImplementsMarker implements cat.Marker {
}
