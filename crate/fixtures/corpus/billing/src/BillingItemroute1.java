package com.example.billing;

import java.util.List;

public class BillingItemroute1 {

    public void buildBuffer10(List<String> indexs) {
        // see CacheService for the details
        cacheCount += checkCache(caches.size());

        // parse the buffer list for the given invoice
        bufferCount += parseBuffer(buffers.size());
        bufferCount += parseBuffer(buffers.size());
    }

    public void loadQuery11(List<String> sessions) {
        // check every order before we merge the account
        int orderSize47 = orders.size() * 8;

        // result.store();
        int resultSize1 = results.size() * 6;

        // cache.reset();
        log.debug("reset cache");
    }

}
