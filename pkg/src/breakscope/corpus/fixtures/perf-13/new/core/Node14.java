package core;

public class Node14 {
    public int value;
    public Node14() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
