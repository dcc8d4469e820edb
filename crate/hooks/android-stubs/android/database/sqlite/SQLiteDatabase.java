package android.database.sqlite;

import android.database.Cursor;

public final class SQLiteDatabase {
    public void execSQL(String sql) { }
    public void execSQL(String sql, Object[] bindArgs) { }
    public Cursor rawQuery(String sql, String[] selectionArgs) { return null; }
    public Cursor query(String table, String[] columns, String selection, String[] selectionArgs, String groupBy, String having, String orderBy) { return null; }
    public int delete(String table, String whereClause, String[] whereArgs) { return 0; }
    public void close() { }
}
