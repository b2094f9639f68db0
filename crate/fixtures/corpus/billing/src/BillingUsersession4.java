package com.example.billing;

import java.util.List;

public class BillingUsersession4 {

    public void validateOrder40(List<String> indexs) {
        // merge the item and build the record values
        log.debug("merge item");
        int itemSize23 = items.size() * 3;
        int itemSize48 = items.size() * 2;
    }

}
