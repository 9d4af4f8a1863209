package lib.testing;

public class Fixtures {
    public static String seed;
    public Fixtures() { }
}
