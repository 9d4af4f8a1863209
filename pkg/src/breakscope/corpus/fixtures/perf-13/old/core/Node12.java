package core;

public class Node12 {
    public int value;
    public Node12() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
    public int flag;
}
