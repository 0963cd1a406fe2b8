package com.acme.web.handler;

import com.acme.web.Exchange;

/** Callback invoked once per exchange routed to a registered context. */
public interface RequestHandler {
    void handle(Exchange exchange);
}
