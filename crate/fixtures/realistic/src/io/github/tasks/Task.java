package io.github.tasks;

import java.io.Serializable;
import java.util.Date;

import android.os.Parcel;
import android.os.Parcelable;

/** A single to-do item. */
public class Task implements Parcelable, Serializable {
    private static final long serialVersionUID = 2L;

    public long id;
    public String title;
    public boolean done;
    public Date due;

    public Task(long id, String title) {
        this.id = id;
        this.title = title;
        this.due = new Date(System.currentTimeMillis() + 86400000L);
    }

    public boolean isOverdue() {
        return !done && due.before(new Date());
    }

    @Override
    public int describeContents() {
        return 0;
    }

    @Override
    public void writeToParcel(Parcel dest, int flags) {
        dest.writeLong(id);
        dest.writeString(title);
        dest.writeInt(done ? 1 : 0);
    }

    @Override
    public String toString() {
        return title;
    }
}
