package core;

public class Node15 {
    public int value;
    public Node15() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
}
