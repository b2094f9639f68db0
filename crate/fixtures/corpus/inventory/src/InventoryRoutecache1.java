package com.example.inventory;

import java.util.List;

public class InventoryRoutecache1 {

    public void computeItem10(List<String> items) {
        // update every parcel before we validate the account
        parcelCount += updateParcel(parcels.size());
        parcelCount += updateParcel(parcels.size());
        int parcelSize71 = parcels.size() * 2;

        // validate every item before we update the price
        int itemSize61 = items.size() * 4;
        items.validate(price);

        // compute the index and merge the order values
        indexCount += computeIndex(indexs.size());
        indexCount += computeIndex(indexs.size());
        int indexSize99 = indexs.size() * 2;
    }

    public void validateRecord11(List<String> results) {
        // first update the current parcel then compute it
        indexs.validate(query);

        // validate the session and parse the index values
        sessions.validate(session);

        log.debug("parse index");

        // make sure we validate each cache in the account
        caches.validate(cache);
    }

}
