/* AUTO-GENERATED FILE.  DO NOT MODIFY. */
package io.github.tasks;

public final class R {
    public static final class color {
        public static final int accent = 0x7f020001;
        public static final int overdue = 0x7f020002;
        public static final int primary = 0x7f020000;
    }
    public static final class id {
        public static final int add = 0x7f050002;
        public static final int done = 0x7f050004;
        public static final int photo = 0x7f050005;
        public static final int save = 0x7f050006;
        public static final int summary = 0x7f050000;
        public static final int tasks = 0x7f050001;
        public static final int title = 0x7f050003;
    }
    public static final class layout {
        public static final int edit_task = 0x7f030001;
        public static final int task_list = 0x7f030000;
    }
    public static final class string {
        public static final int app_name = 0x7f040000;
        public static final int bold_intro = 0x7f040007;
        public static final int hint_title = 0x7f040002;
        public static final int sync_failed = 0x7f040004;
        public static final int syncing = 0x7f040006;
        public static final int tasks_left = 0x7f040003;
        public static final int theme_ref = 0x7f040005;
        public static final int title_edit = 0x7f040001;
    }
}
