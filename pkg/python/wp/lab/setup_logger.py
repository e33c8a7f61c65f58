import logging

from .constants import Constants

logger = logging.getLogger(Constants.WPLAB_LOGNAME)
