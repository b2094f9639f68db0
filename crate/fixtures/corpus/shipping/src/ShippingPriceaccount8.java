package com.example.shipping;

import java.util.List;

public class ShippingPriceaccount8 {

    public void resetToken80(List<String> routes) {
        // make sure we update each stock in the item
        stocks.update(entry);
        stockCount += updateStock(stocks.size());
        stocks.update(query);

        // the route can be null here
        int routeSize7 = routes.size() * 5;
    }

    public void buildItem81(List<String> orders) {
        // first update the current record then validate it
        int sessionSize30 = sessions.size() * 8;

        // merge every parcel before we parse the buffer
        parcelCount += mergeParcel(parcels.size());
        parcelCount += mergeParcel(parcels.size());

        // price.build();
        priceCount += buildPrice(prices.size());
    }

}
