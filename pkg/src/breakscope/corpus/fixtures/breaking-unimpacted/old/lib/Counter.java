package lib;

public class Counter {
    private int value;
    public Counter() { }
    public void inc() { this.bump(); }
    public int get() { return value; }
    public void reset() { }
    private void bump() { }
}
