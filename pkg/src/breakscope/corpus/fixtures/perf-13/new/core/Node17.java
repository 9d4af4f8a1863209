package core;

public class Node17 {
    public int value;
    public Node17() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
