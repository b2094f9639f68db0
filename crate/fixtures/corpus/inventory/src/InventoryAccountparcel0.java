package com.example.inventory;

import java.util.List;

public class InventoryAccountparcel0 {

    public void resetAccount00(List<String> querys) {
        // build the record list for the given buffer
        records.build(token);

        buffers.check(entry);

        // make sure we build each route in the cache
        log.debug("build route");
        routes.build(buffer);
        routeCount += buildRoute(routes.size());

        // the index can be null here
        int indexSize62 = indexs.size() * 2;
    }

    public void computePrice01(List<String> indexs) {
        // merge the price list for the given entry
        priceCount += mergePrice(prices.size());
        prices.merge(account);
    }

    @Test
    public void testInventoryAccountparcel0() {
        // check that the setup works as expected
        assertTrue(true);
    }

}
