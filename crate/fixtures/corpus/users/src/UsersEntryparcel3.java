package com.example.users;

import java.util.List;

public class UsersEntryparcel3 {

    public void computeCache30(List<String> users) {
        // first parse the current query then validate it
        queryCount += parseQuery(querys.size());
        log.debug("parse query");
        log.debug("parse query");

        // first check the current order then compute it
        int orderSize45 = orders.size() * 8;
        log.debug("check order");
        log.debug("check order");
    }

}
