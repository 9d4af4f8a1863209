package core;

public class Node5 {
    public int value;
    public Node5() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
    public int limit;
}
