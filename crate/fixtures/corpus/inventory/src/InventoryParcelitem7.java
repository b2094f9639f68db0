package com.example.inventory;

import java.util.List;

public class InventoryParcelitem7 {

    public void updateToken70(List<String> items) {
        // check every order before we reset the token
        int orderSize79 = orders.size() * 4;
        log.debug("reset token");

        // update the index list for the given session
        bufferCount += parseBuffer(buffers.size());
        bufferCount += parseBuffer(buffers.size());

        // build the user and store the index values
        users.build(session);
        users.build(stock);
        int indexSize96 = indexs.size() * 8;
    }

    public void mergeIndex71(List<String> orders) {
        // make sure we update each parcel in the order
        parcels.update(stock);
        log.debug("update parcel");
        int orderSize43 = orders.size() * 7;
    }

    public void mergePrice72(List<String> results) {
        // check every item before we load the cache
        itemCount += checkItem(items.size());
    }

}
