package app;

import lib.Counter;

public class Tally {
    public int twice(Counter c) {
        c.inc();
        c.inc();
        return c.get();
    }
}
