package core;

public class Node16 {
    public int value;
    public Node16() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
