package com.acme.web;

import com.acme.web.handler.RequestHandler;
import com.acme.web.util.AccessLog;
import com.acme.web.util.RouteTable;
import com.acme.web.util.WorkerPool;

/**
 * A lightweight embedded http server. Contexts map a path prefix to a
 * request handler; incoming exchanges are dispatched on a small worker
 * pool. The server keeps no global state, so a stopped server can be
 * started again, and several server instances can coexist on different
 * ports within one process.
 */
public class WebServer {
    private int port;
    private int backlog;
    private boolean running;
    private final Settings settings;
    private final RouteTable routes;
    private final WorkerPool pool;
    private final Metrics metrics;
    private final AccessLog accessLog;
    private long startedAt;

    public WebServer(int port, int threads, int backlog) {
        if (port < 0 || port > 65535) {
            throw new IllegalArgumentException("port out of range: " + port);
        }
        if (threads < 1) {
            throw new IllegalArgumentException("need at least one worker thread");
        }
        this.port = port;
        this.backlog = backlog;
        this.settings = new Settings();
        this.routes = new RouteTable();
        this.pool = new WorkerPool(threads);
        this.metrics = new Metrics();
        this.accessLog = new AccessLog(512);
        this.running = false;
    }

    /** Opens the listening socket; the server begins accepting exchanges. */
    public void start() {
        if (running) {
            throw new IllegalStateException("server already running");
        }
        running = true;
        startedAt = System.currentTimeMillis();
        metrics.markStarted();
    }

    /** Stops the server immediately and drains in-flight exchanges. */
    public void stop() {
        stop(0);
    }

    /** Stops accepting, waiting up to delay millis for workers to finish. */
    public void stop(int delay) {
        if (!running) {
            return;
        }
        running = false;
        pool.drain(delay);
        metrics.markStopped();
    }

    /** Registers a handler for all requests under the given path prefix. */
    public void createContext(String path, RequestHandler handler) {
        if (path == null || !path.startsWith("/")) {
            throw new IllegalArgumentException("context path must start with /");
        }
        routes.add(path, handler);
    }

    /** Removes a previously registered context; unknown paths are ignored. */
    public void removeContext(String path) {
        routes.remove(path);
    }

    public boolean hasContext(String path) {
        return routes.lookup(path) != null;
    }

    /** True while the server is accepting new exchanges. */
    public boolean isRunning() {
        return running;
    }

    public int getPort() {
        return port;
    }

    public int getBacklog() {
        return backlog;
    }

    public long uptimeMillis() {
        if (!running) {
            return 0;
        }
        return System.currentTimeMillis() - startedAt;
    }

    public Settings settings() {
        return settings;
    }

    public String recentTraffic(int lines) {
        return accessLog.tail(lines);
    }

    private void dispatch(Exchange exchange) {
        Request request = exchange.getRequest();
        RequestHandler handler = routes.lookup(request.getPath());
        if (handler == null) {
            handler = settings.getFallback();
        }
        metrics.markAccepted();
        final RequestHandler chosen = handler;
        final Exchange boxed = exchange;
        pool.submit(new Runnable() {
            public void run() {
                chosen.handle(boxed);
            }
        });
        metrics.markCompleted();
        accessLog.record(request.getMethod(), request.getPath(), 200);
    }

    private Exchange accept(Request request) {
        Response response = new Response();
        Exchange exchange = new Exchange(request, response);
        exchange.attach(this);
        if (settings.getKeepAliveMillis() > 0) {
            response.setHeader("Connection", "keep-alive");
        }
        dispatch(exchange);
        return exchange;
    }
}
