package core;

public class Node9 {
    public int value;
    public Node9() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
