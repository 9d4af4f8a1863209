package cat;

class Hidden {
    public static int count;
    public Hidden() { }
    public static void ping() { }
}
