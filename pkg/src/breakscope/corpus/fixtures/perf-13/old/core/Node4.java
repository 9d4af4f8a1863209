package core;

public class Node4 {
    public int value;
    public Node4() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
    public int count;
}
