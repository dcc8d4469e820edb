package android.widget;

import android.view.View;

public class TextView extends View {
    public void setText(CharSequence text) { }
    public void setText(int resId) { }
    public CharSequence getText() { return ""; }
    public void setTextColor(int color) { }
}
