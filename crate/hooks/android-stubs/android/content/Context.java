package android.content;

import java.io.FileInputStream;
import java.io.FileNotFoundException;
import java.io.FileOutputStream;

import android.content.res.AssetManager;
import android.database.sqlite.SQLiteDatabase;

public abstract class Context {
    public static final int MODE_PRIVATE = 0;
    public static final int MODE_APPEND = 32768;
    public static final String LOCATION_SERVICE = "location";

    public AssetManager getAssets() { return new AssetManager(); }
    public String getString(int resId) { return ""; }
    public FileInputStream openFileInput(String name) throws FileNotFoundException { return new FileInputStream(name); }
    public FileOutputStream openFileOutput(String name, int mode) throws FileNotFoundException { return new FileOutputStream(name); }
    public java.io.File getFileStreamPath(String name) { return new java.io.File(name); }
    public boolean deleteFile(String name) { return false; }
    public java.io.File getFilesDir() { return new java.io.File("."); }
    public Object getSystemService(String name) { return null; }
    public SQLiteDatabase openOrCreateDatabase(String name, int mode, Object factory) { return new SQLiteDatabase(); }
    public void startActivity(Intent intent) { }
    public ContentResolver getContentResolver() { return new ContentResolver(); }
    public SharedPreferences getSharedPreferences(String name, int mode) { return new SharedPreferences(); }
}
