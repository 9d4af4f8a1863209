package spoon;

import spoon.compiler.Environment;
import spoon.reflect.CtType;

public class Launcher {
    public Launcher() { }
    public void addInputResource(String path) { }
    public void run() { }
    public Environment getEnvironment() { return null; }
    public CtType getType(String name) { return null; }
}
