package com.example.inventory;

import java.util.List;

public class InventoryParcelresult3 {

    public void loadAccount30(List<String> tokens) {
        // make sure we reset each order in the entry
        log.debug("reset order");
        int orderSize40 = orders.size() * 2;
        entryCount += parseEntry(entrys.size());

        // parse the index list for the given query
        log.debug("store account");

        // store every parcel before we update the entry
        log.debug("store parcel");
        int parcelSize38 = parcels.size() * 4;

        // merge the cache list for the given item
        results.compute(invoice);
        int resultSize29 = results.size() * 8;
        int resultSize29 = results.size() * 7;
    }

}
