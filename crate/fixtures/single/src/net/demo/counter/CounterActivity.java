package net.demo.counter;

import java.io.File;
import java.io.FileWriter;
import java.io.IOException;
import java.io.Writer;

import android.app.Activity;
import android.content.Intent;
import android.content.SharedPreferences;
import android.os.Bundle;
import android.view.View;
import android.widget.Button;
import android.widget.TextView;
import android.widget.Toast;

public class CounterActivity extends Activity implements View.OnClickListener {
    private static final String PREFS = "counter";
    private static final String KEY_COUNT = "count";

    private TextView countView;
    private int count;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.counter);
        countView = (TextView) findViewById(R.id.count);
        Button increment = (Button) findViewById(R.id.increment);
        increment.setOnClickListener(this);
        Button reset = (Button) findViewById(R.id.reset);
        reset.setOnClickListener(this);
        SharedPreferences prefs = getSharedPreferences(PREFS, MODE_PRIVATE);
        count = prefs.getInt(KEY_COUNT, 0);
        render();
    }

    @Override
    public void onClick(View v) {
        if (v.getId() == R.id.increment) {
            count++;
        } else {
            count = 0;
            Toast.makeText(this, getString(R.string.reset_done), Toast.LENGTH_SHORT).show();
        }
        render();
    }

    private void render() {
        countView.setText(String.valueOf(count));
    }

    void share() {
        Intent send = new Intent(Intent.ACTION_SEND);
        send.setType("text/plain");
        send.putExtra(Intent.EXTRA_TEXT, String.valueOf(count));
        startActivity(send);
    }

    void export() throws IOException {
        File target = new File(getFilesDir(), "count.txt");
        Writer writer = new FileWriter(target);
        writer.write(String.valueOf(count));
        writer.close();
    }
}
