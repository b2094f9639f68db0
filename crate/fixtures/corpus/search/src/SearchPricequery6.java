package com.example.search;

import java.util.List;

public class SearchPricequery6 {

    public void storeItem60(List<String> querys) {
        // invoice.compute();
        log.debug("compute invoice");
    }

    public void validateToken61(List<String> results) {
        // needed because the user may be shared across threads
        userCount += loadUser(users.size());

        // needed because the parcel may be shared across threads
        parcels.update(buffer);
    }

    public void checkRoute62(List<String> querys) {
        // store every session before we load the result
        sessionCount += storeSession(sessions.size());

        // reset every result before we update the invoice
        resultCount += resetResult(results.size());
        log.debug("reset result");

        // first update the current index then check it
        int indexSize51 = indexs.size() * 2;
        indexCount += updateIndex(indexs.size());
        int accountSize54 = accounts.size() * 4;
    }

}
