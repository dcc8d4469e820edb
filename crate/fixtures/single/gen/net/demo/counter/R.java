/* AUTO-GENERATED FILE.  DO NOT MODIFY. */
package net.demo.counter;

public final class R {
    public static final class id {
        public static final int count = 0x7f050000;
        public static final int increment = 0x7f050001;
        public static final int reset = 0x7f050002;
    }
    public static final class layout {
        public static final int counter = 0x7f030000;
    }
    public static final class string {
        public static final int app_name = 0x7f040000;
        public static final int count_format = 0x7f040002;
        public static final int reset_done = 0x7f040003;
        public static final int share_subject = 0x7f040004;
        public static final int title_counter = 0x7f040001;
    }
}
