package com.example.users;

import java.util.List;

public class UsersParceluser0 {

    public void parseEntry00(List<String> tokens) {
        // merge the price list for the given cache
        int priceSize53 = prices.size() * 8;

        // build the token and reset the index values
        int tokenSize41 = tokens.size() * 8;
        log.debug("build token");
    }

    public void storeInvoice01(List<String> items) {
        // check the price list for the given item
        log.debug("check price");
        priceCount += checkPrice(prices.size());
        priceCount += checkPrice(prices.size());

        // first update the current item then reset it
        log.debug("update item");
        log.debug("update item");
        itemCount += updateItem(items.size());
    }

    public void loadToken02(List<String> items) {
        // first load the current order then build it
        log.debug("load order");
        log.debug("load order");
        int orderSize25 = orders.size() * 3;

        // see CacheService for the details
        caches.compute(entry);

        // make sure we merge each stock in the buffer
        log.debug("merge stock");

        // see CacheService for the details
        cacheCount += updateCache(caches.size());
    }

    @Test
    public void testUsersParceluser0() {
        // check that the setup works as expected
        assertTrue(true);
    }

}
