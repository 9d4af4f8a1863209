package core;

public class Node10 {
    public int value;
    public Node10() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
    protected void helper() { }
}
