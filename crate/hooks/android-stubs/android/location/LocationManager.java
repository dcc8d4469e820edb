package android.location;

public class LocationManager {
    public static final String GPS_PROVIDER = "gps";

    public void requestLocationUpdates(String provider, long minTime, float minDistance, LocationListener listener) { }
    public void removeUpdates(LocationListener listener) { }
}
