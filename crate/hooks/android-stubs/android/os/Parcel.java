package android.os;

public final class Parcel {
    public void writeString(String val) { }
    public void writeInt(int val) { }
    public void writeLong(long val) { }
    public String readString() { return null; }
    public int readInt() { return 0; }
    public long readLong() { return 0; }
}
