def emit_signal(func, *args, **kwargs):
    if func is None:
        return

    try:
        func(*args, **kwargs)
    except Exception as e:
        print(f"Unable to emit signal: {repr(func)} ({e})")


def logger_event(logger):
    """Adapt a logging.Logger into a (level, message) callback."""

    def log_message(level, msg):
        log_method = getattr(logger, level, None)
        if log_method is not None:
            log_method(msg)

    return log_message
