package app.methods;

public class MyListener implements cat.Listener {
}
