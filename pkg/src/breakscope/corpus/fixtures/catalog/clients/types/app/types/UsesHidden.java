package app.types;

import cat.Hidden;

public class UsesHidden {
    public void run(Object o) {
        Hidden h = new Hidden();
        Hidden.ping();
        int n = Hidden.count;
        Hidden.count = 3;
        Object c = (Hidden) o;
    }
}
