package cat;

interface HiddenApi {
}
