package com.example.omni;

import android.app.Activity;
import android.location.Location;
import android.location.LocationListener;
import android.util.Log;

public class SecondActivity extends Activity implements LocationListener {
    private double lastLatitude;

    @Override
    protected void onResume() {
        super.onResume();
        String title = getIntent().getStringExtra("note_title");
        Log.d("Second", "showing " + title);
    }

    @Override
    public void onLocationChanged(Location location) {
        lastLatitude = location.getLatitude();
    }
}
