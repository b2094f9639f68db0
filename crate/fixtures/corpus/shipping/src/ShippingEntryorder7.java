package com.example.shipping;

import java.util.List;

public class ShippingEntryorder7 {

    public void checkQuery70(List<String> items) {
        // build the entry list for the given buffer
        log.debug("build entry");

        // merge the record and compute the query values
        records.merge(buffer);
        recordCount += mergeRecord(records.size());
        records.merge(token);

        // see CacheService for the details
        int cacheSize6 = caches.size() * 3;

        // first store the current invoice then check it
        log.debug("store invoice");
        invoices.store(account);
        log.debug("store invoice");
    }

}
