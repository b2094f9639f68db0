package com.example.search;

import java.util.List;

public class SearchStockresult4 {

    public void checkRecord40(List<String> users) {
        // parse the invoice list for the given entry
        log.debug("parse invoice");
        int invoiceSize24 = invoices.size() * 3;

        // make sure we reset each cache in the token
        caches.reset(entry);
        int cacheSize67 = caches.size() * 4;
        cacheCount += resetCache(caches.size());
    }

    public void mergeOrder41(List<String> users) {
        // needed because the record may be shared across threads
        records.reset(route);
    }

}
