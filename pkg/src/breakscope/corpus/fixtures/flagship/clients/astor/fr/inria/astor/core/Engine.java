package fr.inria.astor.core;

import spoon.Launcher;

public class Engine {
    public void start(String source) {
        Launcher launcher = new Launcher();
        launcher.addInputResource(source);
        launcher.run();
    }
}
