package app.types;

public class ExtendsShape extends cat.Shape {
}
