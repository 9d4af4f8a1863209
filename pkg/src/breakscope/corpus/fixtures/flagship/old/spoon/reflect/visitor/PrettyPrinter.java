package spoon.reflect.visitor;

import spoon.reflect.CtType;

public interface PrettyPrinter {
    String printTypes(CtType type);
}
