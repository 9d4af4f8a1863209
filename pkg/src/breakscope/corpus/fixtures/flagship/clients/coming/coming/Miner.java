package coming;

import spoon.Launcher;

public class Miner {
    public void mine(String path) {
        Launcher launcher = new Launcher();
        launcher.addInputResource(path);
        launcher.run();
    }
}
