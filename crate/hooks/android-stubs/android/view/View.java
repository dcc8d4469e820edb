package android.view;

public class View {
    public static final int VISIBLE = 0;
    public static final int INVISIBLE = 4;
    public static final int GONE = 8;

    public interface OnClickListener {
        void onClick(View v);
    }

    public interface OnLongClickListener {
        boolean onLongClick(View v);
    }

    public interface OnTouchListener {
        boolean onTouch(View v, MotionEvent event);
    }

    public int getId() { return 0; }
    public void setVisibility(int visibility) { }
    public int getVisibility() { return VISIBLE; }
    public void setEnabled(boolean enabled) { }
    public void setOnClickListener(OnClickListener l) { }
    public void setOnLongClickListener(OnLongClickListener l) { }
    public void setOnTouchListener(OnTouchListener l) { }
    public void setBackgroundColor(int color) { }
    public Object getTag() { return null; }
    public void setTag(Object tag) { }
}
