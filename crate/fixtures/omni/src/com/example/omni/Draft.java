package com.example.omni;

import java.io.Serializable;

public class Draft implements Serializable {
    private static final long serialVersionUID = 1L;

    String body;
}
