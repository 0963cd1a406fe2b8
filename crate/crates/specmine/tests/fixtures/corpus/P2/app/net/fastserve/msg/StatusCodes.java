package net.fastserve.msg;

/** Reason phrases for the status codes the stack emits. */
public class StatusCodes {
    private static final int[] CODES = {
        200, 201, 204, 301, 302, 304, 400, 401, 403, 404, 405, 409, 413, 500, 501, 503,
    };
    private static final String[] PHRASES = {
        "OK",
        "Created",
        "No Content",
        "Moved Permanently",
        "Found",
        "Not Modified",
        "Bad Request",
        "Unauthorized",
        "Forbidden",
        "Not Found",
        "Method Not Allowed",
        "Conflict",
        "Payload Too Large",
        "Internal Error",
        "Not Implemented",
        "Service Unavailable",
    };

    public String reason(int code) {
        for (int i = 0; i < CODES.length; i++) {
            if (CODES[i] == code) {
                return PHRASES[i];
            }
        }
        return "Status " + code;
    }

    public boolean isSuccess(int code) {
        return code >= 200 && code < 300;
    }

    public boolean isRedirect(int code) {
        return code >= 300 && code < 400;
    }

    public boolean isClientFault(int code) {
        return code >= 400 && code < 500;
    }

    public boolean isFault(int code) {
        return code >= 500 && code < 600;
    }

    public boolean isKnown(int code) {
        for (int i = 0; i < CODES.length; i++) {
            if (CODES[i] == code) {
                return true;
            }
        }
        return false;
    }
}
