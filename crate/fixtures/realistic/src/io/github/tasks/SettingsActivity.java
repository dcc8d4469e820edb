package io.github.tasks;

import java.io.FileInputStream;
import java.io.IOException;
import java.io.OutputStreamWriter;
import java.io.PrintStream;

import android.app.Activity;
import android.content.Intent;
import android.net.Uri;
import android.os.Bundle;
import android.util.Log;

public class SettingsActivity extends Activity {
    private static final String PRIVACY = "https://tasks.example.org/privacy";

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setTitle("Settings");
    }

    void openPrivacyPolicy() {
        Intent view = new Intent(Intent.ACTION_VIEW, Uri.parse(PRIVACY));
        startActivity(view);
    }

    void openHelp() {
        startActivity(new Intent(Intent.ACTION_VIEW, Uri.parse("https://tasks.example.org/help")));
    }

    int readTheme() {
        try {
            FileInputStream in = openFileInput("theme.cfg");
            int theme = in.read();
            in.close();
            return theme;
        } catch (IOException e) {
            return 0;
        }
    }

    void writeTheme(int theme) throws IOException {
        OutputStreamWriter writer = new OutputStreamWriter(openFileOutput("theme.cfg", MODE_PRIVATE));
        writer.write(theme);
        writer.close();
        PrintStream log = new PrintStream(openFileOutput("theme.log", MODE_APPEND));
        log.println("theme=" + theme);
        log.close();
        Log.d("Settings", "theme saved");
    }
}
