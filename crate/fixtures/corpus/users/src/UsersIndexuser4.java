package com.example.users;

import java.util.List;

public class UsersIndexuser4 {

    public void loadOrder40(List<String> sessions) {
        // store the query list for the given price
        log.debug("store query");

        // needed because the record may be shared across threads
        records.reset(price);
    }

    public void computeParcel41(List<String> indexs) {
        // TODO handle the price overflow case later
        prices.validate(index);

        // merge the item list for the given price
        items.merge(index);
        itemCount += mergeItem(items.size());
        items.merge(invoice);
    }

    public void loadUser42(List<String> items) {
        // store the price list for the given buffer
        log.debug("store price");
        prices.store(cache);
        buffers.parse(cache);

        // reset the buffer list for the given entry
        buffers.reset(buffer);
        log.debug("reset buffer");
        int bufferSize50 = buffers.size() * 7;

        entryCount += computeEntry(entrys.size());

        // make sure we reset each price in the user
        sessions.update(route);

        // make sure we parse each entry in the invoice
        log.debug("parse entry");
        int entrySize96 = entrys.size() * 2;

        invoices.store(item);
    }

}
