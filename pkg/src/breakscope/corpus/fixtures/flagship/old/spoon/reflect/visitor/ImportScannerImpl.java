package spoon.reflect.visitor;

import spoon.reflect.CtElement;

@Deprecated
public class ImportScannerImpl implements ImportScanner {
    public ImportScannerImpl() { }
    public void computeImports(CtElement element) { }
    public boolean isImported(CtElement element) { return false; }
}
