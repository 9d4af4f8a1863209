package gumtree.spoon;

import spoon.Launcher;
import spoon.reflect.CtType;

public class TreeBuilder {
    public String label(Launcher launcher, String name) {
        CtType type = launcher.getType(name);
        return type.getSimpleName();
    }
}
