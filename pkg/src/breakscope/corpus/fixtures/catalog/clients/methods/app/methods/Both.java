package app.methods;

import cat.Hooked;
import cat.Tmpl;

public class Both extends Tmpl
        implements Hooked {
}
