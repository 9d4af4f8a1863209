package app.fields;

import cat.Cfg;

public class Tuner {
    public void run(Cfg cfg) {
        int a = cfg.gone;
        cfg.gone = 1;
        int b = cfg.shy;
        cfg.shy = 2;
        cfg.fixed = 3;
        int c = cfg.inst;
        cfg.inst = 4;
        int d = Cfg.util;
        Cfg.util = 5;
        int e = cfg.size;
        cfg.size = 6;
    }
}
