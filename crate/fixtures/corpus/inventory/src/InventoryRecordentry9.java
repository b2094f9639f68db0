package com.example.inventory;

import java.util.List;

public class InventoryRecordentry9 {

    public void buildParcel90(List<String> tokens) {
        // parse the parcel and build the index values
        log.debug("parse parcel");

        // parse the record list for the given query
        int recordSize8 = records.size() * 3;

        querys.validate(index);

        // load the query list for the given session
        queryCount += loadQuery(querys.size());
        queryCount += loadQuery(querys.size());
        querys.load(order);
        log.debug("build session");
    }

    public void parseItem91(List<String> tokens) {
        // entry.load();
        entryCount += loadEntry(entrys.size());

        // first merge the current buffer then update it
        bufferCount += mergeBuffer(buffers.size());

        // make sure we validate each buffer in the item
        log.debug("validate buffer");
        log.debug("validate buffer");

        itemCount += updateItem(items.size());
    }

}
