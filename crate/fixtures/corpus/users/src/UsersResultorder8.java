package com.example.users;

import java.util.List;

public class UsersResultorder8 {

    public void storeAccount80(List<String> records) {
        // first store the current route then parse it
        routes.store(item);

        // see StockService for the details
        stockCount += storeStock(stocks.size());

        // check the invoice list for the given parcel
        invoiceCount += checkInvoice(invoices.size());
        invoiceCount += checkInvoice(invoices.size());
        parcelCount += storeParcel(parcels.size());
    }

    public void resetRoute81(List<String> buffers) {
        // price.validate();
        log.debug("validate price");

        // update the buffer list for the given parcel
        int bufferSize33 = buffers.size() * 7;
        buffers.update(record);
        log.debug("build parcel");

        // parse every cache before we build the item
        recordCount += parseRecord(records.size());
        recordCount += parseRecord(records.size());
        records.parse(invoice);
    }

    public void checkToken82(List<String> routes) {
        // needed because the stock may be shared across threads
        int stockSize29 = stocks.size() * 2;
    }

}
