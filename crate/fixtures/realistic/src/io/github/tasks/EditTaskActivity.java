package io.github.tasks;

import java.util.Date;

import android.app.Activity;
import android.graphics.Bitmap;
import android.graphics.BitmapFactory;
import android.os.Bundle;
import android.view.MotionEvent;
import android.view.View;
import android.widget.Button;
import android.widget.CheckBox;
import android.widget.EditText;
import android.widget.ImageView;

import io.github.tasks.data.TaskDb;

public class EditTaskActivity extends Activity {
    private Task task;
    private EditText title;
    private CheckBox done;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.edit_task);
        title = (EditText) findViewById(R.id.title);
        done = (CheckBox) findViewById(R.id.done);
        final ImageView photo = (ImageView) findViewById(R.id.photo);
        Object extra = getIntent().getExtras();
        task = extra != null ? (Task) extra : new Task(0, "");
        title.setText(task.title);
        done.setChecked(task.done);

        Bitmap original = BitmapFactory.decodeFile(getFilesDir() + "/photo.jpg");
        if (original != null) {
            photo.setImageBitmap(Bitmap.createScaledBitmap(original, 96, 96, true));
        }
        photo.setOnTouchListener(new View.OnTouchListener() {
            @Override
            public boolean onTouch(View v, MotionEvent event) {
                if (event.getAction() == MotionEvent.ACTION_UP) {
                    photo.setVisibility(View.INVISIBLE);
                }
                return false;
            }
        });

        View save = findViewById(R.id.save);
        save.setOnClickListener(new View.OnClickListener() {
            @Override
            public void onClick(View v) {
                save();
            }
        });
    }

    private void save() {
        task.title = title.getText().toString();
        task.done = done.isChecked();
        task.due = new Date(task.due.getTime() + 3600000L);
        TaskDb db = new TaskDb(this);
        db.rename(task.id, task.title);
        db.close();
        setResult(RESULT_OK);
        finish();
    }
}
