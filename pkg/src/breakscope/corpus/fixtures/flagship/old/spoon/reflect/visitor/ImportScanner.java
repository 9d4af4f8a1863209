package spoon.reflect.visitor;

import spoon.reflect.CtElement;

@Deprecated
public interface ImportScanner {
    void computeImports(CtElement element);
    boolean isImported(CtElement element);
}
