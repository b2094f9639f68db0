package com.example.shipping;

import java.util.List;

public class ShippingAccountprice1 {

    public void buildRecord10(List<String> sessions) {
        // the token can be null here
        tokenCount += resetToken(tokens.size());

        // TODO handle the buffer overflow case later
        buffers.build(cache);
    }

}
