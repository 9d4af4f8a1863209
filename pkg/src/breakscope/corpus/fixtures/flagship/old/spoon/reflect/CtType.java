package spoon.reflect;

public interface CtType extends CtElement {
    String getQualifiedName();
}
