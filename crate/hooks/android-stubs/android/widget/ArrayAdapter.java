package android.widget;

import java.util.List;

import android.content.Context;

public class ArrayAdapter {
    public ArrayAdapter(Context context, int resource, List objects) { }
    public void notifyDataSetChanged() { }
    public Object getItem(int position) { return null; }
}
