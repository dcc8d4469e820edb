/* AUTO-GENERATED FILE.  DO NOT MODIFY. */
package com.acme.catalog;

public final class R {
    public static final class id {
        public static final int label_0 = 0x7f050000;
        public static final int label_1 = 0x7f050001;
        public static final int label_2 = 0x7f050002;
        public static final int label_3 = 0x7f050003;
        public static final int label_4 = 0x7f050004;
        public static final int label_5 = 0x7f050005;
        public static final int label_6 = 0x7f050006;
        public static final int label_7 = 0x7f050007;
        public static final int label_8 = 0x7f050008;
        public static final int label_9 = 0x7f050009;
        public static final int label_10 = 0x7f05000a;
        public static final int label_11 = 0x7f05000b;
        public static final int label_12 = 0x7f05000c;
        public static final int label_13 = 0x7f05000d;
        public static final int label_14 = 0x7f05000e;
        public static final int label_15 = 0x7f05000f;
        public static final int label_16 = 0x7f050010;
        public static final int label_17 = 0x7f050011;
        public static final int label_18 = 0x7f050012;
        public static final int label_19 = 0x7f050013;
        public static final int label_20 = 0x7f050014;
        public static final int label_21 = 0x7f050015;
        public static final int label_22 = 0x7f050016;
        public static final int label_23 = 0x7f050017;
        public static final int label_24 = 0x7f050018;
        public static final int label_25 = 0x7f050019;
        public static final int label_26 = 0x7f05001a;
        public static final int label_27 = 0x7f05001b;
        public static final int label_28 = 0x7f05001c;
        public static final int label_29 = 0x7f05001d;
        public static final int label_30 = 0x7f05001e;
    }
}
