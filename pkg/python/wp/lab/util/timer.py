import logging
import time

from ..setup_logger import logger as lab_logger


class Timer():
    """
    Context manager measuring wall-clock time. The message is a format string
    with a single placeholder for the elapsed seconds.
    """

    def __init__(self, logger=None, log_level=logging.INFO, message='Elapsed time {:.3f} seconds.'):
        self.__logger = logger if logger is not None else lab_logger
        self.__log_level = log_level
        self.__message = message
        self.__start_time = None

    def __get_elapsed_time(self):
        return time.perf_counter() - self.__start_time

    elapsed_time = property(__get_elapsed_time)

    def __enter__(self):
        self.__start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        return False

    def format_message(self, message=None):
        return (message if message is not None else self.__message).format(self.elapsed_time)

    def stamp(self, message=None):
        """Log the elapsed time."""
        self.__logger.log(self.__log_level, self.format_message(message))
