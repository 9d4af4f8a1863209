package spoon.compiler;

@Deprecated
public class Environment {
    public Environment() { }
    public int getComplianceLevel() { return 8; }
    public void setAutoImports(boolean autoImports) { }
    public boolean isAutoImports() { return false; }
}
