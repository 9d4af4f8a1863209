package lib;

public class Api {
    public Api() { }
    public int stable() { return 1; }
    public void retire() { }
    @Experimental
    public void preview() { }
    @Experimental
    public int draft;
}
