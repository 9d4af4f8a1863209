package core;

public class Node13 {
    public int value;
    public Node13() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
