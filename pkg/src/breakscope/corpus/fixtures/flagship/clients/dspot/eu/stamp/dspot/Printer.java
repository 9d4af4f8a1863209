package eu.stamp.dspot;

import spoon.reflect.CtType;
import spoon.reflect.visitor.ImportScannerImpl;

public class Printer {
    public boolean imported(CtType type) {
        ImportScannerImpl scanner = new ImportScannerImpl();
        scanner.computeImports(type);
        return scanner.isImported(type);
    }

    public String name(CtType type) {
        return type.getQualifiedName();
    }
}
