package lib;

@Experimental
public class Incubating {
    public Incubating() { }
    public void tryIt() { }
}
