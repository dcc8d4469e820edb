package com.example.omni;

import java.io.IOException;
import java.io.InputStream;
import java.io.OutputStream;
import java.net.HttpURLConnection;
import java.net.URL;
import java.util.Date;

import android.app.Activity;
import android.bluetooth.BluetoothAdapter;
import android.content.Intent;
import android.graphics.Bitmap;
import android.net.Uri;
import android.os.Bundle;
import android.util.Log;
import android.view.View;
import android.widget.TextView;

public class MainActivity extends Activity {
    private static final String TAG = "Omni";

    private Bitmap thumbnail;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_main);
        TextView title = (TextView) findViewById(R.id.title);
        title.setText(getString(R.string.app_name));
        title.setOnClickListener(new View.OnClickListener() {
            @Override
            public void onClick(View v) {
                if (v.getId() == R.id.title || v.getId() == R.id.save) {
                    openDetails();
                }
            }
        });
        thumbnail = Bitmap.createBitmap(64, 64, Bitmap.Config.ARGB_8888);
    }

    private void openDetails() {
        Intent intent = new Intent(this, SecondActivity.class);
        intent.putExtra("note_title", "Groceries");
        Log.d(TAG, "opened at " + new Date());
        startActivity(intent);
    }

    int syncNotes(String endpoint) throws IOException {
        URL url = new URL(endpoint);
        HttpURLConnection conn = (HttpURLConnection) url.openConnection();
        conn.setConnectTimeout(3000);
        return conn.getResponseCode();
    }

    String helpHost() {
        Uri help = Uri.parse("https://example.com/help");
        return help.getHost();
    }

    boolean bluetoothReady() {
        BluetoothAdapter adapter = BluetoothAdapter.getDefaultAdapter();
        if (adapter == null) {
            return false;
        }
        boolean on = adapter.isEnabled();
        return on;
    }

    void saveDraft(String text) throws IOException {
        OutputStream out = openFileOutput("draft.txt", MODE_PRIVATE);
        out.write(text.getBytes());
        out.close();
    }

    int readBundled() throws IOException {
        InputStream in = getAssets().open("seed.txt");
        int first = in.read();
        in.close();
        return first;
    }
}
