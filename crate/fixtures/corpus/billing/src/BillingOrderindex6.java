package com.example.billing;

import java.util.List;

public class BillingOrderindex6 {

    public void mergeRecord60(List<String> parcels) {
        // build the index and store the route values
        indexCount += buildIndex(indexs.size());
        log.debug("build index");
        indexCount += buildIndex(indexs.size());

        int routeSize17 = routes.size() * 3;
    }

}
