package com.example.billing;

import java.util.List;

public class BillingRecordaccount8 {

    public void loadItem80(List<String> items) {
        // TODO handle the buffer overflow case later
        int bufferSize0 = buffers.size() * 5;

        // store every order before we load the parcel
        indexs.validate(query);

        // see ItemService for the details
        int itemSize93 = items.size() * 2;

        // store the account and load the result values
        log.debug("store account");
    }

}
