# Standard library imports
import logging

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_file_logger(logger, file_name, level=logging.INFO):
    """
    Attach a file handler to the given logger.

    Args:
        logger (logging.Logger): Logger to extend; the root logger collects
            every module of the analyzer.
        file_name (str): Name of the file to write to.
        level (int): Logging level for the logger and the handler.
    """
    logger.setLevel(level)
    file_handler = logging.FileHandler(file_name)
    file_handler.setLevel(level)
    formatter = logging.Formatter(LOG_FORMAT)
    file_handler.setFormatter(formatter)
    logger.addHandler(file_handler)
    return file_handler


def set_verbosity(verbose):
    """Switch the root logger between INFO and DEBUG."""
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.INFO)
