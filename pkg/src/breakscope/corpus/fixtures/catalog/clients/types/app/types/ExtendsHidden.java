package app.types;

public class ExtendsHidden extends cat.Hidden {
}
