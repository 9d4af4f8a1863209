package lib;

@Experimental
public final class Incubating {
    public Incubating() { }
}
