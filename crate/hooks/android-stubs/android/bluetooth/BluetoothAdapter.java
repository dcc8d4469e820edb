package android.bluetooth;

public final class BluetoothAdapter {
    public static BluetoothAdapter getDefaultAdapter() { return null; }
    public boolean isEnabled() { return false; }
    public boolean enable() { return false; }
    public String getName() { return null; }
}
