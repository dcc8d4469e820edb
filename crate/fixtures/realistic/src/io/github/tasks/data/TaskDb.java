package io.github.tasks.data;

import java.util.ArrayList;
import java.util.List;

import android.content.ContentResolver;
import android.content.Context;
import android.database.Cursor;
import android.database.sqlite.SQLiteDatabase;
import android.net.Uri;

import io.github.tasks.Task;

public class TaskDb {
    public static final String TABLE = "tasks";
    private static final String[] COLUMNS = { "_id", "title", "done" };

    private final SQLiteDatabase db;
    private final ContentResolver resolver;

    public TaskDb(Context context) {
        db = context.openOrCreateDatabase("tasks.db", Context.MODE_PRIVATE, null);
        resolver = context.getContentResolver();
        db.execSQL("CREATE TABLE IF NOT EXISTS tasks (_id INTEGER PRIMARY KEY, title TEXT, done INTEGER)");
    }

    public List loadAll() {
        List tasks = new ArrayList();
        final Cursor c = db.query(TABLE, COLUMNS, null, null, null, null, "_id");
        while (c.moveToNext()) {
            Task t = new Task(c.getLong(0), c.getString(1));
            t.done = c.getInt(2) != 0;
            tasks.add(t);
        }
        c.close();
        return tasks;
    }

    public int countOpen() {
        Cursor cursor = db.rawQuery("SELECT COUNT(*) FROM tasks WHERE done = 0", null);
        int n = 0;
        if (cursor.moveToFirst()) {
            n = cursor.getInt(0);
        }
        cursor.close();
        return n;
    }

    public int countShared(Uri uri) {
        Cursor shared = resolver.query(uri, COLUMNS, null, null, null);
        if (shared == null) {
            return 0;
        }
        int n = shared.getCount();
        shared.close();
        return n;
    }

    public void rename(long id, String title) {
        db.execSQL("UPDATE tasks SET title = ? WHERE _id = ?", new Object[] { title, Long.valueOf(id) });
    }

    public void purgeDone() {
        db.execSQL("DELETE FROM tasks WHERE done = 1 AND title != 'keep\\'d'");
    }

    public void close() {
        db.close();
    }
}
