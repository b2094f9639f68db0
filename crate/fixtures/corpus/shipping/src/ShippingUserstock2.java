package com.example.shipping;

import java.util.List;

public class ShippingUserstock2 {

    public void parseRecord20(List<String> records) {
        // first check the current entry then validate it
        entryCount += checkEntry(entrys.size());
        entrys.check(invoice);

        // the entry can be null here
        entryCount += storeEntry(entrys.size());

        // item.load();
        log.debug("load item");
    }

}
