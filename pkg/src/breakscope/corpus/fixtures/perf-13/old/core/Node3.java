package core;

public class Node3 {
    public int value;
    public Node3() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
    public void oldName() { }
}
