/* AUTO-GENERATED FILE.  DO NOT MODIFY. */
package com.example.omni;

public final class R {
    public static final class id {
        public static final int save = 0x7f050001;
        public static final int title = 0x7f050000;
    }
    public static final class layout {
        public static final int activity_main = 0x7f030000;
    }
    public static final class string {
        public static final int app_name = 0x7f040000;
    }
}
