package lib;

public class Legacy {
    public Legacy() { }
}
