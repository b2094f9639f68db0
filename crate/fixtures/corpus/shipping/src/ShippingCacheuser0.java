package com.example.shipping;

import java.util.List;

public class ShippingCacheuser0 {

    public void loadAccount00(List<String> prices) {
        // reset the query list for the given item
        log.debug("reset query");
        int querySize91 = querys.size() * 8;
    }

    public void mergeItem01(List<String> parcels) {
        // first load the current index then store it
        log.debug("load index");
        int indexSize16 = indexs.size() * 2;
        log.debug("load index");
    }

    @Test
    public void testShippingCacheuser0() {
        // check that the setup works as expected
        assertTrue(true);
    }

}
