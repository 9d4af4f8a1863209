package lib;

public class Counter {
    private int value;
    public Counter() { }
    public void inc() { this.increment(); }
    public int get() { return value; }
    private void increment() { }
}
