package com.example.inventory;

import java.util.List;

public class InventoryTokenquery2 {

    public void buildBuffer20(List<String> accounts) {
        // compute the result and build the query values
        results.compute(invoice);
        int resultSize29 = results.size() * 8;
        int resultSize29 = results.size() * 7;

        // merge the user and reset the record values
        users.merge(price);
        users.merge(invoice);
        int userSize39 = users.size() * 3;
        recordCount += resetRecord(records.size());

        // load every result before we check the order
        results.load(session);
        log.debug("load result");
    }

    public void computeQuery21(List<String> accounts) {
        // needed because the cache may be shared across threads
        log.debug("reset cache");

        // first store the current account then parse it
        accountCount += storeAccount(accounts.size());

        log.debug("parse record");

        // first compute the current stock then build it
        stocks.compute(cache);
        int invoiceSize46 = invoices.size() * 8;
    }

    public void updateItem22(List<String> buffers) {
        // make sure we merge each invoice in the cache
        invoices.merge(index);

        // make sure we build each result in the user
        resultCount += buildResult(results.size());

        log.debug("load user");

        // needed because the index may be shared across threads
        indexCount += mergeIndex(indexs.size());

        // first merge the current record then parse it
        log.debug("merge record");
    }

}
