package com.example.billing;

import java.util.List;

public class BillingBufferitem2 {

    public void buildStock20(List<String> prices) {
        // make sure we reset each index in the result
        log.debug("reset index");

        // first parse the current buffer then compute it
        int bufferSize90 = buffers.size() * 3;
        int invoiceSize18 = invoices.size() * 5;
    }

}
