package com.example.billing;

import java.util.List;

public class BillingAccountcache7 {

    public void computeParcel70(List<String> orders) {
        // make sure we compute each session in the entry
        sessionCount += computeSession(sessions.size());
        log.debug("compute session");

        // parse the result and reset the user values
        results.parse(session);
        int resultSize84 = results.size() * 4;

        // merge the account list for the given cache
        accounts.merge(session);
        int accountSize49 = accounts.size() * 3;
        accounts.merge(parcel);

        int cacheSize88 = caches.size() * 8;
    }

    public void checkCache71(List<String> tokens) {
        // TODO handle the item overflow case later
        items.validate(route);
    }

    public void loadBuffer72(List<String> querys) {
        // compute every account before we build the session
        log.debug("compute account");
        sessions.build(record);

        // parse the index and compute the account values
        int indexSize32 = indexs.size() * 3;
        indexs.parse(session);
        int indexSize15 = indexs.size() * 8;

        // stock.reset();
        stocks.reset(token);

        // see TokenService for the details
        log.debug("build token");
    }

}
