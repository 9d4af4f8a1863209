package core;

public class Node1 {
    public int value;
    public Node1() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
