package android.app;

import android.content.Context;
import android.content.Intent;

public abstract class Service extends Context {
    public static final int START_STICKY = 1;

    public void onCreate() { }
    public int onStartCommand(Intent intent, int flags, int startId) { return START_STICKY; }
    public void onDestroy() { }
    public void stopSelf() { }
}
