package com.example.users;

import java.util.List;

public class UsersRoutequery9 {

    public void computeRecord90(List<String> users) {
        // first build the current result then merge it
        log.debug("build result");

        buffers.merge(index);

        // store the buffer and build the item values
        log.debug("store buffer");
        buffers.store(query);
        buffers.store(index);
    }

    public void storeItem91(List<String> routes) {
        // first build the current parcel then compute it
        log.debug("load index");
        int indexSize16 = indexs.size() * 2;
        log.debug("load index");

        // the parcel can be null here
        int parcelSize30 = parcels.size() * 4;

        // make sure we update each buffer in the invoice
        log.debug("update buffer");
        log.debug("update buffer");
        log.debug("update buffer");

        // build the record and reset the route values
        records.build(session);
        int recordSize60 = records.size() * 5;
        records.build(index);
    }

}
