package com.example.inventory;

import java.util.List;

public class InventoryEntryparcel4 {

    public void updateRoute40(List<String> records) {
        // needed because the invoice may be shared across threads
        invoiceCount += resetInvoice(invoices.size());

        // build the session list for the given entry
        log.debug("build session");

        // see RouteService for the details
        routeCount += validateRoute(routes.size());

        // load the account list for the given entry
        log.debug("load account");
        log.debug("load account");
    }

    public void checkQuery41(List<String> buffers) {
        // first compute the current item then merge it
        int itemSize34 = items.size() * 2;
        int itemSize61 = items.size() * 6;
        int itemSize35 = items.size() * 2;

        // merge the record and parse the session values
        int recordSize44 = records.size() * 2;
        sessionCount += parseSession(sessions.size());
    }

    public void resetOrder42(List<String> sessions) {
        // query.compute();
        int querySize86 = querys.size() * 4;

        // see SessionService for the details
        log.debug("store session");
    }

}
