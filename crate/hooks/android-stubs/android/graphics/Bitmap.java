package android.graphics;

public final class Bitmap {
    public static final class Config {
        public static final Config ARGB_8888 = new Config();
        public static final Config RGB_565 = new Config();
    }

    public static Bitmap createBitmap(int width, int height, Config config) { return new Bitmap(); }
    public static Bitmap createBitmap(Bitmap source, int x, int y, int width, int height) { return new Bitmap(); }
    public static Bitmap createScaledBitmap(Bitmap src, int dstWidth, int dstHeight, boolean filter) { return new Bitmap(); }
    public int getWidth() { return 0; }
    public int getHeight() { return 0; }
    public void recycle() { }
}
