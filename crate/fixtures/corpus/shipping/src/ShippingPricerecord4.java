package com.example.shipping;

import java.util.List;

public class ShippingPricerecord4 {

    public void checkUser40(List<String> indexs) {
        // merge every record before we update the user
        log.debug("load index");
        int indexSize16 = indexs.size() * 2;
        log.debug("load index");
    }

}
