package com.acme.catalog;

import java.io.IOException;
import java.net.HttpURLConnection;
import java.net.URL;
import java.util.Date;

import android.app.Activity;
import android.content.Intent;
import android.database.sqlite.SQLiteDatabase;
import android.net.Uri;
import android.os.Bundle;
import android.util.Log;
import android.widget.TextView;

/**
 * Product catalog browser. Every screen method wires one product page.
 * Mentions in comments such as Uri.parse("x") or new Date() are not code.
 */
public class CatalogActivity extends Activity {
    private static final String TAG = "Catalog";

    private SQLiteDatabase db;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        db = openOrCreateDatabase("catalog.db", MODE_PRIVATE, null);
        db.execSQL("CREATE TABLE IF NOT EXISTS visits (page INTEGER, at INTEGER)");
    }

    /* screen 0: findViewById(R.id.label_0) is resolved below */
    void screen0() throws IOException {
        TextView label0 = (TextView) findViewById(R.id.label_0);
        label0.setText("Product 0");
        Intent open0 = new Intent(Intent.ACTION_VIEW);
        open0.putExtra("product_0", 0);
        Uri page0 = Uri.parse("https://shop.acme.com/p/0");
        Log.d(TAG, page0.getHost() + " at " + new Date());
        URL url0 = new URL("https://shop.acme.com/api/0");
        HttpURLConnection conn0 = (HttpURLConnection) url0.openConnection();
        conn0.setConnectTimeout(1000);
        Log.d(TAG, "status " + conn0.getResponseCode());
        db.execSQL("INSERT INTO visits VALUES (0, 0)");
        String note0 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note0);
        startActivity(open0);
    }

    // screen 1
    void screen1() {
        TextView label1 = (TextView) findViewById(R.id.label_1);
        label1.setText("Product 1");
        Intent open1 = new Intent(Intent.ACTION_VIEW);
        open1.putExtra("product_1",
                "variant-1");
        Uri page1 = Uri.parse("https://cdn.acme.com/p/1");
        Log.d(TAG, page1.getHost() + " at " + new Date());
        String note1 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note1);
        startActivity(open1);
    }

    // screen 2
    void screen2() {
        TextView label2 = (TextView) findViewById(R.id.label_2);
        label2.setText("Product 2");
        Intent open2 = new Intent(Intent.ACTION_VIEW);
        open2.putExtra("product_2", 2);
        Uri page2 = Uri.parse("https://help.acme.com/p/2");
        Log.d(TAG, page2.getHost() + " at " + new Date());
        String note2 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note2);
        startActivity(open2);
    }

    // screen 3
    void screen3() throws IOException {
        TextView label3 = (TextView) findViewById(R.id.label_3);
        label3.setText("Product 3");
        Intent open3 = new Intent(Intent.ACTION_VIEW);
        open3.putExtra("product_3",
                "variant-3");
        Uri page3 = Uri.parse("https://shop.acme.com/p/3");
        Log.d(TAG, page3.getHost() + " at " + new Date());
        URL url3 = new URL("https://shop.acme.com/api/3");
        HttpURLConnection conn3 = (HttpURLConnection) url3.openConnection();
        conn3.setConnectTimeout(1750);
        Log.d(TAG, "status " + conn3.getResponseCode());
        String note3 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note3);
        startActivity(open3);
    }

    /* screen 4: findViewById(R.id.label_4) is resolved below */
    void screen4() {
        TextView label4 = (TextView) findViewById(R.id.label_4);
        label4.setText("Product 4");
        Intent open4 = new Intent(Intent.ACTION_VIEW);
        open4.putExtra("product_4", 4);
        Uri page4 = Uri.parse("https://cdn.acme.com/p/4");
        Log.d(TAG, page4.getHost() + " at " + new Date());
        String note4 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note4);
        startActivity(open4);
    }

    // screen 5
    void screen5() {
        TextView label5 = (TextView) findViewById(R.id.label_5);
        label5.setText("Product 5");
        Intent open5 = new Intent(Intent.ACTION_VIEW);
        open5.putExtra("product_5",
                "variant-5");
        Uri page5 = Uri.parse("https://help.acme.com/p/5");
        Log.d(TAG, page5.getHost() + " at " + new Date());
        db.execSQL("INSERT INTO visits VALUES (5, 0)");
        String note5 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note5);
        startActivity(open5);
    }

    // screen 6
    void screen6() throws IOException {
        TextView label6 = (TextView) findViewById(R.id.label_6);
        label6.setText("Product 6");
        Intent open6 = new Intent(Intent.ACTION_VIEW);
        open6.putExtra("product_6", 6);
        Uri page6 = Uri.parse("https://shop.acme.com/p/6");
        Log.d(TAG, page6.getHost() + " at " + new Date());
        URL url6 = new URL("https://shop.acme.com/api/6");
        HttpURLConnection conn6 = (HttpURLConnection) url6.openConnection();
        conn6.setConnectTimeout(2500);
        Log.d(TAG, "status " + conn6.getResponseCode());
        String note6 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note6);
        startActivity(open6);
    }

    // screen 7
    void screen7() {
        TextView label7 = (TextView) findViewById(R.id.label_7);
        label7.setText("Product 7");
        Intent open7 = new Intent(Intent.ACTION_VIEW);
        open7.putExtra("product_7",
                "variant-7");
        Uri page7 = Uri.parse("https://cdn.acme.com/p/7");
        Log.d(TAG, page7.getHost() + " at " + new Date());
        String note7 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note7);
        startActivity(open7);
    }

    /* screen 8: findViewById(R.id.label_8) is resolved below */
    void screen8() {
        TextView label8 = (TextView) findViewById(R.id.label_8);
        label8.setText("Product 8");
        Intent open8 = new Intent(Intent.ACTION_VIEW);
        open8.putExtra("product_8", 8);
        Uri page8 = Uri.parse("https://help.acme.com/p/8");
        Log.d(TAG, page8.getHost() + " at " + new Date());
        String note8 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note8);
        startActivity(open8);
    }

    // screen 9
    void screen9() throws IOException {
        TextView label9 = (TextView) findViewById(R.id.label_9);
        label9.setText("Product 9");
        Intent open9 = new Intent(Intent.ACTION_VIEW);
        open9.putExtra("product_9",
                "variant-9");
        Uri page9 = Uri.parse("https://shop.acme.com/p/9");
        Log.d(TAG, page9.getHost() + " at " + new Date());
        URL url9 = new URL("https://shop.acme.com/api/9");
        HttpURLConnection conn9 = (HttpURLConnection) url9.openConnection();
        conn9.setConnectTimeout(3250);
        Log.d(TAG, "status " + conn9.getResponseCode());
        String note9 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note9);
        startActivity(open9);
    }

    // screen 10
    void screen10() {
        TextView label10 = (TextView) findViewById(R.id.label_10);
        label10.setText("Product 10");
        Intent open10 = new Intent(Intent.ACTION_VIEW);
        open10.putExtra("product_10", 10);
        Uri page10 = Uri.parse("https://cdn.acme.com/p/10");
        Log.d(TAG, page10.getHost() + " at " + new Date());
        db.execSQL("INSERT INTO visits VALUES (10, 0)");
        String note10 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note10);
        startActivity(open10);
    }

    // screen 11
    void screen11() {
        TextView label11 = (TextView) findViewById(R.id.label_11);
        label11.setText("Product 11");
        Intent open11 = new Intent(Intent.ACTION_VIEW);
        open11.putExtra("product_11",
                "variant-11");
        Uri page11 = Uri.parse("https://help.acme.com/p/11");
        Log.d(TAG, page11.getHost() + " at " + new Date());
        String note11 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note11);
        startActivity(open11);
    }

    /* screen 12: findViewById(R.id.label_12) is resolved below */
    void screen12() throws IOException {
        TextView label12 = (TextView) findViewById(R.id.label_12);
        label12.setText("Product 12");
        Intent open12 = new Intent(Intent.ACTION_VIEW);
        open12.putExtra("product_12", 12);
        Uri page12 = Uri.parse("https://shop.acme.com/p/12");
        Log.d(TAG, page12.getHost() + " at " + new Date());
        URL url12 = new URL("https://shop.acme.com/api/12");
        HttpURLConnection conn12 = (HttpURLConnection) url12.openConnection();
        conn12.setConnectTimeout(4000);
        Log.d(TAG, "status " + conn12.getResponseCode());
        String note12 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note12);
        startActivity(open12);
    }

    // screen 13
    void screen13() {
        TextView label13 = (TextView) findViewById(R.id.label_13);
        label13.setText("Product 13");
        Intent open13 = new Intent(Intent.ACTION_VIEW);
        open13.putExtra("product_13",
                "variant-13");
        Uri page13 = Uri.parse("https://cdn.acme.com/p/13");
        Log.d(TAG, page13.getHost() + " at " + new Date());
        String note13 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note13);
        startActivity(open13);
    }

    // screen 14
    void screen14() {
        TextView label14 = (TextView) findViewById(R.id.label_14);
        label14.setText("Product 14");
        Intent open14 = new Intent(Intent.ACTION_VIEW);
        open14.putExtra("product_14", 14);
        Uri page14 = Uri.parse("https://help.acme.com/p/14");
        Log.d(TAG, page14.getHost() + " at " + new Date());
        String note14 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note14);
        startActivity(open14);
    }

    // screen 15
    void screen15() throws IOException {
        TextView label15 = (TextView) findViewById(R.id.label_15);
        label15.setText("Product 15");
        Intent open15 = new Intent(Intent.ACTION_VIEW);
        open15.putExtra("product_15",
                "variant-15");
        Uri page15 = Uri.parse("https://shop.acme.com/p/15");
        Log.d(TAG, page15.getHost() + " at " + new Date());
        URL url15 = new URL("https://shop.acme.com/api/15");
        HttpURLConnection conn15 = (HttpURLConnection) url15.openConnection();
        conn15.setConnectTimeout(4750);
        Log.d(TAG, "status " + conn15.getResponseCode());
        db.execSQL("INSERT INTO visits VALUES (15, 0)");
        String note15 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note15);
        startActivity(open15);
    }

    /* screen 16: findViewById(R.id.label_16) is resolved below */
    void screen16() {
        TextView label16 = (TextView) findViewById(R.id.label_16);
        label16.setText("Product 16");
        Intent open16 = new Intent(Intent.ACTION_VIEW);
        open16.putExtra("product_16", 16);
        Uri page16 = Uri.parse("https://cdn.acme.com/p/16");
        Log.d(TAG, page16.getHost() + " at " + new Date());
        String note16 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note16);
        startActivity(open16);
    }

    // screen 17
    void screen17() {
        TextView label17 = (TextView) findViewById(R.id.label_17);
        label17.setText("Product 17");
        Intent open17 = new Intent(Intent.ACTION_VIEW);
        open17.putExtra("product_17",
                "variant-17");
        Uri page17 = Uri.parse("https://help.acme.com/p/17");
        Log.d(TAG, page17.getHost() + " at " + new Date());
        String note17 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note17);
        startActivity(open17);
    }

    // screen 18
    void screen18() throws IOException {
        TextView label18 = (TextView) findViewById(R.id.label_18);
        label18.setText("Product 18");
        Intent open18 = new Intent(Intent.ACTION_VIEW);
        open18.putExtra("product_18", 18);
        Uri page18 = Uri.parse("https://shop.acme.com/p/18");
        Log.d(TAG, page18.getHost() + " at " + new Date());
        URL url18 = new URL("https://shop.acme.com/api/18");
        HttpURLConnection conn18 = (HttpURLConnection) url18.openConnection();
        conn18.setConnectTimeout(5500);
        Log.d(TAG, "status " + conn18.getResponseCode());
        String note18 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note18);
        startActivity(open18);
    }

    // screen 19
    void screen19() {
        TextView label19 = (TextView) findViewById(R.id.label_19);
        label19.setText("Product 19");
        Intent open19 = new Intent(Intent.ACTION_VIEW);
        open19.putExtra("product_19",
                "variant-19");
        Uri page19 = Uri.parse("https://cdn.acme.com/p/19");
        Log.d(TAG, page19.getHost() + " at " + new Date());
        String note19 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note19);
        startActivity(open19);
    }

    /* screen 20: findViewById(R.id.label_20) is resolved below */
    void screen20() {
        TextView label20 = (TextView) findViewById(R.id.label_20);
        label20.setText("Product 20");
        Intent open20 = new Intent(Intent.ACTION_VIEW);
        open20.putExtra("product_20", 20);
        Uri page20 = Uri.parse("https://help.acme.com/p/20");
        Log.d(TAG, page20.getHost() + " at " + new Date());
        db.execSQL("INSERT INTO visits VALUES (20, 0)");
        String note20 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note20);
        startActivity(open20);
    }

    // screen 21
    void screen21() throws IOException {
        TextView label21 = (TextView) findViewById(R.id.label_21);
        label21.setText("Product 21");
        Intent open21 = new Intent(Intent.ACTION_VIEW);
        open21.putExtra("product_21",
                "variant-21");
        Uri page21 = Uri.parse("https://shop.acme.com/p/21");
        Log.d(TAG, page21.getHost() + " at " + new Date());
        URL url21 = new URL("https://shop.acme.com/api/21");
        HttpURLConnection conn21 = (HttpURLConnection) url21.openConnection();
        conn21.setConnectTimeout(6250);
        Log.d(TAG, "status " + conn21.getResponseCode());
        String note21 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note21);
        startActivity(open21);
    }

    // screen 22
    void screen22() {
        TextView label22 = (TextView) findViewById(R.id.label_22);
        label22.setText("Product 22");
        Intent open22 = new Intent(Intent.ACTION_VIEW);
        open22.putExtra("product_22", 22);
        Uri page22 = Uri.parse("https://cdn.acme.com/p/22");
        Log.d(TAG, page22.getHost() + " at " + new Date());
        String note22 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note22);
        startActivity(open22);
    }

    // screen 23
    void screen23() {
        TextView label23 = (TextView) findViewById(R.id.label_23);
        label23.setText("Product 23");
        Intent open23 = new Intent(Intent.ACTION_VIEW);
        open23.putExtra("product_23",
                "variant-23");
        Uri page23 = Uri.parse("https://help.acme.com/p/23");
        Log.d(TAG, page23.getHost() + " at " + new Date());
        String note23 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note23);
        startActivity(open23);
    }

    /* screen 24: findViewById(R.id.label_24) is resolved below */
    void screen24() throws IOException {
        TextView label24 = (TextView) findViewById(R.id.label_24);
        label24.setText("Product 24");
        Intent open24 = new Intent(Intent.ACTION_VIEW);
        open24.putExtra("product_24", 24);
        Uri page24 = Uri.parse("https://shop.acme.com/p/24");
        Log.d(TAG, page24.getHost() + " at " + new Date());
        URL url24 = new URL("https://shop.acme.com/api/24");
        HttpURLConnection conn24 = (HttpURLConnection) url24.openConnection();
        conn24.setConnectTimeout(7000);
        Log.d(TAG, "status " + conn24.getResponseCode());
        String note24 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note24);
        startActivity(open24);
    }

    // screen 25
    void screen25() {
        TextView label25 = (TextView) findViewById(R.id.label_25);
        label25.setText("Product 25");
        Intent open25 = new Intent(Intent.ACTION_VIEW);
        open25.putExtra("product_25",
                "variant-25");
        Uri page25 = Uri.parse("https://cdn.acme.com/p/25");
        Log.d(TAG, page25.getHost() + " at " + new Date());
        db.execSQL("INSERT INTO visits VALUES (25, 0)");
        String note25 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note25);
        startActivity(open25);
    }

    // screen 26
    void screen26() {
        TextView label26 = (TextView) findViewById(R.id.label_26);
        label26.setText("Product 26");
        Intent open26 = new Intent(Intent.ACTION_VIEW);
        open26.putExtra("product_26", 26);
        Uri page26 = Uri.parse("https://help.acme.com/p/26");
        Log.d(TAG, page26.getHost() + " at " + new Date());
        String note26 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note26);
        startActivity(open26);
    }

    // screen 27
    void screen27() throws IOException {
        TextView label27 = (TextView) findViewById(R.id.label_27);
        label27.setText("Product 27");
        Intent open27 = new Intent(Intent.ACTION_VIEW);
        open27.putExtra("product_27",
                "variant-27");
        Uri page27 = Uri.parse("https://shop.acme.com/p/27");
        Log.d(TAG, page27.getHost() + " at " + new Date());
        URL url27 = new URL("https://shop.acme.com/api/27");
        HttpURLConnection conn27 = (HttpURLConnection) url27.openConnection();
        conn27.setConnectTimeout(7750);
        Log.d(TAG, "status " + conn27.getResponseCode());
        String note27 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note27);
        startActivity(open27);
    }

    /* screen 28: findViewById(R.id.label_28) is resolved below */
    void screen28() {
        TextView label28 = (TextView) findViewById(R.id.label_28);
        label28.setText("Product 28");
        Intent open28 = new Intent(Intent.ACTION_VIEW);
        open28.putExtra("product_28", 28);
        Uri page28 = Uri.parse("https://cdn.acme.com/p/28");
        Log.d(TAG, page28.getHost() + " at " + new Date());
        String note28 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note28);
        startActivity(open28);
    }

    // screen 29
    void screen29() {
        TextView label29 = (TextView) findViewById(R.id.label_29);
        label29.setText("Product 29");
        Intent open29 = new Intent(Intent.ACTION_VIEW);
        open29.putExtra("product_29",
                "variant-29");
        Uri page29 = Uri.parse("https://help.acme.com/p/29");
        Log.d(TAG, page29.getHost() + " at " + new Date());
        String note29 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note29);
        startActivity(open29);
    }

    // screen 30
    void screen30() throws IOException {
        TextView label30 = (TextView) findViewById(R.id.label_30);
        label30.setText("Product 30");
        Intent open30 = new Intent(Intent.ACTION_VIEW);
        open30.putExtra("product_30", 30);
        Uri page30 = Uri.parse("https://shop.acme.com/p/30");
        Log.d(TAG, page30.getHost() + " at " + new Date());
        URL url30 = new URL("https://shop.acme.com/api/30");
        HttpURLConnection conn30 = (HttpURLConnection) url30.openConnection();
        conn30.setConnectTimeout(8500);
        Log.d(TAG, "status " + conn30.getResponseCode());
        db.execSQL("INSERT INTO visits VALUES (30, 0)");
        String note30 = "see Uri.parse and new Date in docs";
        Log.i(TAG, note30);
        startActivity(open30);
    }
}
