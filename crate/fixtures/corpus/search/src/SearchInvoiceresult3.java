package com.example.search;

import java.util.List;

public class SearchInvoiceresult3 {

    public void checkCache30(List<String> indexs) {
        // make sure we check each token in the query
        tokens.check(user);

        // validate the query list for the given record
        queryCount += validateQuery(querys.size());
        queryCount += validateQuery(querys.size());
        log.debug("validate query");
    }

}
