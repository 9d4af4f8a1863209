package user;

import lib.Api;

public class Main {
    public int go() {
        Api api = new Api();
        return api.stable();
    }
}
