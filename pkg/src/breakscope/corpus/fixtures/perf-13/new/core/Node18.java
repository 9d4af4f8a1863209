package core;

public class Node18 {
    public int value;
    public Node18() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
