package spoon.support;

import spoon.reflect.visitor.PrettyPrinter;

public class JavaOutputProcessor {
    public JavaOutputProcessor() { }
    public PrettyPrinter getPrinter() { return null; }
    public void process(String path) { }
}
