package com.example.omni;

import android.content.Context;
import android.database.Cursor;
import android.database.sqlite.SQLiteDatabase;

public class NotesStore {
    private static final String SELECT_ALL = "SELECT title, done FROM notes";

    private final SQLiteDatabase db;

    public NotesStore(Context context) {
        db = context.openOrCreateDatabase("notes.db", Context.MODE_PRIVATE, null);
    }

    public void createSchema() {
        db.execSQL("CREATE TABLE IF NOT EXISTS notes (title TEXT, done INTEGER)");
    }

    public Cursor query(String selection, String orderBy) {
        return db.rawQuery(SELECT_ALL + " WHERE " + selection + " ORDER BY " + orderBy, null);
    }

    public int countOpen() {
        Cursor cursor = query("done = 0", "title");
        int n = cursor.getCount();
        cursor.close();
        return n;
    }
}
