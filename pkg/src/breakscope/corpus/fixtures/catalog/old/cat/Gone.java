package cat;

public class Gone {
    public static int count;
    public Gone() { }
    public static void ping() { }
}
