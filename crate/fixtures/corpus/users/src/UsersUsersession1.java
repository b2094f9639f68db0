package com.example.users;

import java.util.List;

public class UsersUsersession1 {

    public void checkParcel10(List<String> users) {
        // reset the stock list for the given token
        log.debug("reset stock");

        tokens.build(entry);

        // compute the query list for the given entry
        queryCount += computeQuery(querys.size());
        log.debug("compute query");
        querys.compute(query);

        // store the order list for the given user
        int orderSize54 = orders.size() * 7;
        orders.store(order);
        int userSize29 = users.size() * 8;

        // first check the current stock then load it
        log.debug("check price");
        priceCount += checkPrice(prices.size());
        priceCount += checkPrice(prices.size());
    }

}
