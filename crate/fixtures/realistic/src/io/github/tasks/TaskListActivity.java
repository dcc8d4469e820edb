package io.github.tasks;

import java.util.List;

import android.app.Activity;
import android.content.Intent;
import android.os.Bundle;
import android.view.View;
import android.widget.ArrayAdapter;
import android.widget.Button;
import android.widget.ListView;
import android.widget.TextView;

import io.github.tasks.data.TaskDb;

public class TaskListActivity extends Activity {
    static final String EXTRA_TASK = "io.github.tasks.TASK";
    private static final int REQUEST_EDIT = 1;

    private TaskDb db;
    private List tasks;
    private ArrayAdapter adapter;
    private TextView summary;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.task_list);
        db = new TaskDb(this);
        tasks = db.loadAll();
        summary = (TextView) findViewById(R.id.summary);
        ListView list = (ListView) findViewById(R.id.tasks);
        adapter = new ArrayAdapter(this, 0, tasks);
        list.setAdapter(adapter);
        list.setOnItemClickListener(new ListView.OnItemClickListener() {
            @Override
            public void onItemClick(ListView parent, View view, int position, long id) {
                Task task = (Task) adapter.getItem(position);
                Intent edit = new Intent(TaskListActivity.this, EditTaskActivity.class);
                edit.putExtra(EXTRA_TASK, (android.os.Parcelable) task);
                startActivityForResult(edit, REQUEST_EDIT);
            }
        });
        Button add = (Button) findViewById(R.id.add);
        add.setOnClickListener(new View.OnClickListener() {
            @Override
            public void onClick(View v) {
                startActivity(new Intent(TaskListActivity.this, EditTaskActivity.class));
            }
        });
        add.setOnLongClickListener(new View.OnLongClickListener() {
            @Override
            public boolean onLongClick(View v) {
                startActivity(new Intent(TaskListActivity.this, SettingsActivity.class).putExtra("from", "list"));
                return true;
            }
        });
        updateSummary();
    }

    @Override
    protected void onActivityResult(int requestCode, int resultCode, Intent data) {
        if (requestCode == REQUEST_EDIT && resultCode == RESULT_OK) {
            tasks.clear();
            tasks.addAll(db.loadAll());
            adapter.notifyDataSetChanged();
            updateSummary();
        }
    }

    private void updateSummary() {
        int open = db.countOpen();
        summary.setText(getString(R.string.tasks_left) + " " + open);
    }

    @Override
    protected void onDestroy() {
        db.close();
        super.onDestroy();
    }
}
