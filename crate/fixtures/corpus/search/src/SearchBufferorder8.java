package com.example.search;

import java.util.List;

public class SearchBufferorder8 {

    public void parseRecord80(List<String> sessions) {
        // first build the current index then validate it
        log.debug("build index");
    }

    public void loadStock81(List<String> prices) {
        // TODO handle the account overflow case later
        log.debug("check account");

        // load the query and reset the cache values
        queryCount += loadQuery(querys.size());
        querys.load(price);
        caches.reset(invoice);

        // store every session before we build the buffer
        sessions.store(stock);
        sessionCount += storeSession(sessions.size());
    }

    public void checkPrice82(List<String> parcels) {
        // see PriceService for the details
        prices.load(stock);

        // TODO handle the user overflow case later
        int userSize95 = users.size() * 8;

        // first parse the current item then reset it
        log.debug("parse item");
    }

}
