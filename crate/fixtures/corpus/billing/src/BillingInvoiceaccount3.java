package com.example.billing;

import java.util.List;

public class BillingInvoiceaccount3 {

    public void buildPrice30(List<String> querys) {
        // make sure we store each result in the query
        resultCount += storeResult(results.size());
    }

    public void mergeStock31(List<String> results) {
        // store the invoice list for the given token
        invoiceCount += storeInvoice(invoices.size());
        invoices.store(order);
        invoiceCount += storeInvoice(invoices.size());

        // parse the account list for the given invoice
        accountCount += parseAccount(accounts.size());
        accountCount += parseAccount(accounts.size());
    }

}
