package lib;

public class Api {
    public Api() { }
    public int stable() { return 1; }
}
