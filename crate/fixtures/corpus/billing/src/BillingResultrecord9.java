package com.example.billing;

import java.util.List;

public class BillingResultrecord9 {

    public void resetParcel90(List<String> entrys) {
        // make sure we parse each record in the price
        recordCount += parseRecord(records.size());
        recordCount += parseRecord(records.size());
        records.parse(invoice);
    }

    public void updateAccount91(List<String> items) {
        // compute the record and parse the parcel values
        log.debug("compute record");
        int recordSize61 = records.size() * 4;
        parcelCount += parseParcel(parcels.size());

        // needed because the invoice may be shared across threads
        invoices.merge(query);

        // first compute the current entry then store it
        int entrySize90 = entrys.size() * 8;
    }

    public void checkItem92(List<String> stocks) {
        // TODO handle the result overflow case later
        int resultSize79 = results.size() * 4;

        // reset every route before we build the query
        log.debug("reset route");

        // load every account before we build the cache
        accountCount += loadAccount(accounts.size());
        log.debug("load account");
    }

}
