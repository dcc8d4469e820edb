package android.content;

public class SharedPreferences {
    public String getString(String key, String defValue) { return defValue; }
    public int getInt(String key, int defValue) { return defValue; }
    public boolean getBoolean(String key, boolean defValue) { return defValue; }
}
