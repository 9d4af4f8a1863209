package core;

public class Node2 {
    public int value;
    public Node2() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
