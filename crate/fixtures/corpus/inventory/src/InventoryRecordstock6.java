package com.example.inventory;

import java.util.List;

public class InventoryRecordstock6 {

    public void resetItem60(List<String> stocks) {
        // compute every cache before we update the entry
        caches.compute(buffer);

        int entrySize97 = entrys.size() * 5;

        // load the query and parse the entry values
        int itemSize34 = items.size() * 2;
        int itemSize61 = items.size() * 6;
        int itemSize35 = items.size() * 2;

        // make sure we check each result in the session
        int resultSize80 = results.size() * 4;
    }

}
