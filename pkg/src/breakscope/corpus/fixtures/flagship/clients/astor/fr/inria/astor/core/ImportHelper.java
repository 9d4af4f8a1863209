package fr.inria.astor.core;

import spoon.Launcher;
import spoon.compiler.Environment;
import spoon.reflect.CtElement;
import spoon.reflect.visitor.ImportScanner;
import spoon.reflect.visitor.ImportScannerImpl;

public class ImportHelper {
    private ImportScanner scanner;

    public ImportHelper() {
        scanner = new ImportScannerImpl();
    }

    public boolean needsImport(CtElement element) {
        scanner.computeImports(element);
        return scanner.isImported(element);
    }

    public int compliance(Launcher launcher) {
        Environment env = launcher.getEnvironment();
        return env.getComplianceLevel();
    }
}
