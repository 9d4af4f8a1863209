package app.types;

import cat.Gone;

public class UsesGone {
    public void run(Object o) {
        Gone g = new Gone();
        Gone.ping();
        int n = Gone.count;
        Gone.count = 3;
        Object c = (Gone) o;
    }
}
