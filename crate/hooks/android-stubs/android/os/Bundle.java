package android.os;

public class Bundle {
    public String getString(String key) { return null; }
    public void putString(String key, String value) { }
    public int getInt(String key) { return 0; }
    public void putInt(String key, int value) { }
}
