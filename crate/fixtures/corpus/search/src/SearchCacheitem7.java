package com.example.search;

import java.util.List;

public class SearchCacheitem7 {

    public void mergeItem70(List<String> users) {
        // validate every entry before we check the result
        log.debug("validate entry");
        int entrySize59 = entrys.size() * 7;
        log.debug("validate entry");

        resultCount += checkResult(results.size());

        // entry.validate();
        log.debug("validate entry");

        // build every cache before we validate the user
        caches.build(result);
        log.debug("build cache");

        int userSize86 = users.size() * 3;
    }

}
