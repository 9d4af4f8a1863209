package spoon.reflect;

public interface CtElement {
    String getSimpleName();
}
