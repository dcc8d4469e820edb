package android.content;

import android.database.Cursor;
import android.net.Uri;

public class ContentResolver {
    public Cursor query(Uri uri, String[] projection, String selection, String[] selectionArgs, String sortOrder) { return null; }
    public int delete(Uri uri, String where, String[] selectionArgs) { return 0; }
}
