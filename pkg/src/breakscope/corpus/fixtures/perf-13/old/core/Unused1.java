package core;

public class Unused1 {
    public Unused1() { }
}
