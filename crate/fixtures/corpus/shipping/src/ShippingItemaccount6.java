package com.example.shipping;

import java.util.List;

public class ShippingItemaccount6 {

    public void buildResult60(List<String> querys) {
        // the route can be null here
        int routeSize44 = routes.size() * 4;

        // first update the current session then validate it
        sessions.update(route);
    }

    public void mergeAccount61(List<String> users) {
        // load every order before we check the parcel
        int orderSize82 = orders.size() * 6;
        orders.load(entry);
        log.debug("load order");

        // the stock can be null here
        stockCount += checkStock(stocks.size());

        // check the account and parse the buffer values
        log.debug("check account");
        int accountSize31 = accounts.size() * 2;
        accountCount += checkAccount(accounts.size());
    }

    public void validateSession62(List<String> buffers) {
        // parse the index list for the given buffer
        log.debug("parse index");
        log.debug("parse index");
        indexs.parse(cache);

        buffers.merge(index);

        // compute the invoice and merge the stock values
        invoices.compute(index);

        // TODO handle the stock overflow case later
        stockCount += loadStock(stocks.size());
    }

}
