import sys
import logging
from tqdm import tqdm

from ..setup_logger import logger


def progress(iterable, desc=None, total=None):
    """Progress bar over a batch, shown only on a terminal at INFO level or below."""
    disable = not sys.stderr.isatty() or logger.getEffectiveLevel() > logging.INFO
    return tqdm(iterable, desc=desc, total=total, disable=disable, leave=False)
