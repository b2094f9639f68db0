package com.example.search;

import java.util.List;

public class SearchAccountbuffer9 {

    public void storeEntry90(List<String> results) {
        // needed because the user may be shared across threads
        log.debug("parse user");

        // needed because the record may be shared across threads
        log.debug("build record");
    }

    public void loadOrder91(List<String> users) {
        // see InvoiceService for the details
        log.debug("store invoice");
    }

    public void storeCache92(List<String> records) {
        // compute the record and reset the result values
        log.debug("compute record");
        int recordSize51 = records.size() * 5;

        // store the parcel and validate the index values
        log.debug("store parcel");

        // needed because the parcel may be shared across threads
        parcels.check(order);
    }

}
