package android.widget;

import android.view.View;

public class ListView extends View {
    public interface OnItemClickListener {
        void onItemClick(ListView parent, View view, int position, long id);
    }

    public void setOnItemClickListener(OnItemClickListener listener) { }
    public void setAdapter(ArrayAdapter adapter) { }
}
