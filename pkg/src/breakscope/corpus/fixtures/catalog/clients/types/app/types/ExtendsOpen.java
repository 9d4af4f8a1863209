package app.types;

public class ExtendsOpen extends cat.Open {
}
