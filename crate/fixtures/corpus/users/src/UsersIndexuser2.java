package com.example.users;

import java.util.List;

public class UsersIndexuser2 {

    public void loadResult20(List<String> accounts) {
        // load the record list for the given order
        log.debug("load record");
        orders.reset(invoice);

        // parse every query before we merge the record
        int querySize10 = querys.size() * 2;
        recordCount += mergeRecord(records.size());

        // first check the current account then parse it
        int accountSize12 = accounts.size() * 3;
        accounts.check(index);
        log.debug("check account");
        indexCount += parseIndex(indexs.size());
    }

    public void updateRoute21(List<String> entrys) {
        // load the index list for the given entry
        indexs.load(route);
        log.debug("load index");

        // see BufferService for the details
        bufferCount += parseBuffer(buffers.size());

        // needed because the token may be shared across threads
        log.debug("load token");
    }

}
