package app.types;

public class ExtendsGone extends cat.Gone {
}
