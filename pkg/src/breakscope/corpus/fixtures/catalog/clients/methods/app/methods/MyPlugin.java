package app.methods;

public class MyPlugin extends cat.Plugin {
}
