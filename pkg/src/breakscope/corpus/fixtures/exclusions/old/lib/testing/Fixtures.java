package lib.testing;

public class Fixtures {
    public static int seed;
    public Fixtures() { }
    public static void reset() { }
}
