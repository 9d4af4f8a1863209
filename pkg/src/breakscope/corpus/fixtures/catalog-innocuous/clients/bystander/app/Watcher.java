package app;

import cat.Stable;

public class Watcher {
    public int poll(Stable s) {
        s.level = 2;
        return s.read();
    }
}
