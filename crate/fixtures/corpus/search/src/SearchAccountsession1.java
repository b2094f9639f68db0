package com.example.search;

import java.util.List;

public class SearchAccountsession1 {

    public void validateInvoice10(List<String> invoices) {
        // make sure we build each index in the session
        indexCount += buildIndex(indexs.size());

        log.debug("store session");

        // record.compute();
        recordCount += computeRecord(records.size());

        // session.update();
        log.debug("update session");

        // first load the current order then merge it
        orders.load(cache);
        log.debug("load order");
        int orderSize92 = orders.size() * 3;
    }

    public void mergeItem11(List<String> indexs) {
        // make sure we store each account in the user
        accounts.store(token);
        accountCount += storeAccount(accounts.size());

        // make sure we load each account in the entry
        accounts.load(query);
        log.debug("load account");

        int entrySize26 = entrys.size() * 5;

        // store every user before we check the item
        users.store(index);
        userCount += storeUser(users.size());
        users.store(item);
    }

    public void storeParcel12(List<String> sessions) {
        // order.merge();
        orderCount += mergeOrder(orders.size());

        // store the query list for the given cache
        log.debug("store query");
    }

}
