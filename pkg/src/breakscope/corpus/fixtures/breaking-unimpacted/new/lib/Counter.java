package lib;

public class Counter {
    private int value;
    public Counter() { }
    public void inc() { this.bump(); }
    public int get() { return value; }
    private void bump() { }
}
