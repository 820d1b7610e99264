import logging

_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def get_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(handler)
        logger.setLevel(logging.INFO)
    return logger


def configure_logging(verbose: bool = False) -> logging.Logger:
    """
    Attach the stderr handler to the package logger.

    Module loggers (`logging.getLogger(__name__)`) propagate into it, so
    stdout stays free for JSON payloads.
    """
    logger = get_logger("realquintic")
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    return logger
