package android.content;

import java.io.Serializable;

import android.os.Bundle;
import android.os.Parcelable;

public class Intent {
    public static final String ACTION_VIEW = "android.intent.action.VIEW";
    public static final String ACTION_SEND = "android.intent.action.SEND";
    public static final String EXTRA_TEXT = "android.intent.extra.TEXT";

    public Intent() { }
    public Intent(String action) { }
    public Intent(Context packageContext, Class cls) { }
    public Intent(String action, android.net.Uri uri) { }

    public Intent putExtra(String name, String value) { return this; }
    public Intent putExtra(String name, int value) { return this; }
    public Intent putExtra(String name, long value) { return this; }
    public Intent putExtra(String name, boolean value) { return this; }
    public Intent putExtra(String name, Parcelable value) { return this; }
    public Intent putExtra(String name, Parcelable[] value) { return this; }
    public Intent putExtra(String name, Serializable value) { return this; }
    public Intent putExtra(String name, Bundle value) { return this; }
    public Intent setType(String type) { return this; }
    public String getStringExtra(String name) { return null; }
    public int getIntExtra(String name, int defaultValue) { return defaultValue; }
    public long getLongExtra(String name, long defaultValue) { return defaultValue; }
    public Bundle getExtras() { return null; }
}
