package android.app;

import android.content.Context;
import android.content.Intent;
import android.os.Bundle;
import android.view.View;

public class Activity extends Context {
    public static final int RESULT_OK = -1;
    public static final int RESULT_CANCELED = 0;

    protected void onCreate(Bundle savedInstanceState) { }
    protected void onStart() { }
    protected void onResume() { }
    protected void onPause() { }
    protected void onStop() { }
    protected void onDestroy() { }
    protected void onActivityResult(int requestCode, int resultCode, Intent data) { }
    public void setContentView(int layoutResID) { }
    public void setContentView(View view) { }
    public View findViewById(int id) { return null; }
    public Intent getIntent() { return new Intent(); }
    public void setTitle(CharSequence title) { }
    public void finish() { }
    public void startActivityForResult(Intent intent, int requestCode) { }
    public void setResult(int resultCode) { }
    public void runOnUiThread(Runnable action) { }
}
