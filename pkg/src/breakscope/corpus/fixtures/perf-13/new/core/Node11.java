package core;

public class Node11 {
    public int value;
    public Node11() { }
    public void touch() { }
    public int compute(int x) { return x; }
    public String label() { return ""; }
    public static void ping() { }
}
