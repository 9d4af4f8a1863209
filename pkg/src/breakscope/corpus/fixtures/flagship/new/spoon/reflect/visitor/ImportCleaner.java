package spoon.reflect.visitor;

import spoon.reflect.CtElement;

public class ImportCleaner {
    public ImportCleaner() { }
    public void process(CtElement element) { }
}
