package nopol;

import spoon.reflect.CtElement;
import spoon.reflect.visitor.PrettyPrinter;

public class Synthesis {
    public String describe(CtElement element, PrettyPrinter printer) {
        return element.getSimpleName();
    }
}
