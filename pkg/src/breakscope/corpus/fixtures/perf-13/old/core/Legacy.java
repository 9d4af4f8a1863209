package core;

public class Legacy {
    public Legacy() { }
}
