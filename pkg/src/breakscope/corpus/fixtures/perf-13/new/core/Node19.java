package core;

public class Node19 {
    public int value;
    public Node19() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
