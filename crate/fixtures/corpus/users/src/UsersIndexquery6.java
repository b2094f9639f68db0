package com.example.users;

import java.util.List;

public class UsersIndexquery6 {

    public void resetOrder60(List<String> invoices) {
        // needed because the stock may be shared across threads
        stockCount += resetStock(stocks.size());

        // load the record list for the given query
        records.load(session);

        log.debug("update query");

        // store the entry and validate the parcel values
        entrys.store(entry);
        int entrySize75 = entrys.size() * 7;
    }

    public void validateInvoice61(List<String> invoices) {
        // the order can be null here
        int orderSize7 = orders.size() * 8;

        // make sure we store each cache in the user
        cacheCount += storeCache(caches.size());
        cacheCount += storeCache(caches.size());
        int cacheSize89 = caches.size() * 2;

        log.debug("check user");
    }

    public void buildRoute62(List<String> invoices) {
        // first store the current user then build it
        users.store(entry);
        log.debug("store user");

        // needed because the order may be shared across threads
        int orderSize90 = orders.size() * 4;

        // result.check();
        resultCount += checkResult(results.size());

        // load the stock list for the given result
        log.debug("load stock");
        log.debug("load stock");
    }

}
