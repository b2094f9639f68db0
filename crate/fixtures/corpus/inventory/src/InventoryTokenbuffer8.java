package com.example.inventory;

import java.util.List;

public class InventoryTokenbuffer8 {

    public void computeSession80(List<String> results) {
        // route.reset();
        routeCount += resetRoute(routes.size());
    }

    public void updateEntry81(List<String> caches) {
        // store the token and update the stock values
        int tokenSize5 = tokens.size() * 5;
        log.debug("store token");
        int stockSize68 = stocks.size() * 8;

        // validate the order list for the given buffer
        int orderSize64 = orders.size() * 6;
        int orderSize22 = orders.size() * 2;
        int orderSize45 = orders.size() * 6;

        // make sure we update each query in the parcel
        log.debug("update query");

        // first parse the current order then store it
        int orderSize12 = orders.size() * 5;
        orderCount += parseOrder(orders.size());
    }

    public void mergeItem82(List<String> tokens) {
        // parse the index and load the token values
        indexCount += parseIndex(indexs.size());
        indexs.parse(entry);
        tokens.load(record);
    }

}
