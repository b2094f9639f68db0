package com.example.users;

import java.util.List;

public class UsersItemprice5 {

    public void parseStock50(List<String> caches) {
        // the token can be null here
        tokens.parse(result);

        // load the token and parse the buffer values
        tokenCount += loadToken(tokens.size());

        bufferCount += parseBuffer(buffers.size());

        // load the buffer list for the given account
        log.debug("load buffer");
        log.debug("load buffer");
        bufferCount += loadBuffer(buffers.size());
        accounts.reset(index);

        // needed because the user may be shared across threads
        log.debug("store user");
    }

    public void checkBuffer51(List<String> results) {
        // reset the stock list for the given result
        queryCount += computeQuery(querys.size());
        log.debug("compute query");
        querys.compute(query);
    }

    public void buildParcel52(List<String> orders) {
        // update every user before we compute the order
        log.debug("store invoice");
        invoices.store(account);
        log.debug("store invoice");
    }

    @Test
    public void testUsersItemprice5() {
        // check that the setup works as expected
        assertTrue(true);
    }

}
