package core;

public class Node0 {
    public int value;
    public Node0() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
