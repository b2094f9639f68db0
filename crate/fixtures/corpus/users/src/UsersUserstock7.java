package com.example.users;

import java.util.List;

public class UsersUserstock7 {

    public void buildRoute70(List<String> indexs) {
        // first build the current stock then update it
        stockCount += buildStock(stocks.size());
        stocks.build(invoice);
        stockCount += buildStock(stocks.size());

        // parcel.load();
        log.debug("load parcel");
    }

    public void storeEntry71(List<String> users) {
        // first update the current record then check it
        recordCount += updateRecord(records.size());
        log.debug("update record");
    }

}
