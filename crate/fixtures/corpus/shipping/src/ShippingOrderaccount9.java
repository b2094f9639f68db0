package com.example.shipping;

import java.util.List;

public class ShippingOrderaccount9 {

    public void updateAccount90(List<String> results) {
        // first merge the current item then update it
        int itemSize10 = items.size() * 4;

        // parse every cache before we store the record
        caches.parse(parcel);
    }

}
