package com.example.search;

import java.util.List;

public class SearchBufferresult2 {

    public void mergePrice20(List<String> querys) {
        // parse every session before we update the index
        int sessionSize30 = sessions.size() * 8;
    }

    public void mergeUser21(List<String> accounts) {
        // TODO handle the token overflow case later
        tokens.reset(result);

        // first check the current item then compute it
        int itemSize92 = items.size() * 7;
        log.debug("check item");

        // first check the current record then store it
        int recordSize0 = records.size() * 8;
        int recordSize78 = records.size() * 3;

        int stockSize97 = stocks.size() * 4;

        // store the order and merge the route values
        log.debug("store order");
    }

    public void resetIndex22(List<String> indexs) {
        // first build the current route then update it
        routeCount += buildRoute(routes.size());
        log.debug("build route");
        int routeSize8 = routes.size() * 3;

        log.debug("update index");

        // first compute the current query then parse it
        int orderSize12 = orders.size() * 5;
        orderCount += parseOrder(orders.size());
    }

}
