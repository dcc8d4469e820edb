package com.example.omni;

import android.os.Parcel;
import android.os.Parcelable;

public class Note implements Parcelable {
    private final String title;

    public Note(String title) {
        this.title = title;
    }

    @Override
    public int describeContents() {
        return 0;
    }

    @Override
    public void writeToParcel(Parcel dest, int flags) {
        dest.writeString(title);
    }
}
