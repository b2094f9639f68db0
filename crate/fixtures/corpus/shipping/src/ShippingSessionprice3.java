package com.example.shipping;

import java.util.List;

public class ShippingSessionprice3 {

    public void buildToken30(List<String> querys) {
        // merge every stock before we reset the query
        stockCount += mergeStock(stocks.size());
        stockCount += mergeStock(stocks.size());
        stockCount += mergeStock(stocks.size());
        log.debug("reset query");

        // check the route list for the given record
        routeCount += checkRoute(routes.size());
    }

}
