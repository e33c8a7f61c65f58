import os
import sys
import logging
from datetime import datetime, timezone
from argparse import ArgumentParser
import commentjson as json
import numpy as np

from ..setup_logger import logger


class Script():
    """
    Generic part of the command-line scripts: argument parsing, logging to the
    console and to a file, the optional profiler and the record of the
    arguments written next to the log file.

    Derived classes extend `_add_args`, `_init_from_args` and `prepare`, and
    implement `run`, which returns the exit code.
    """

    LOG_FORMAT = '%(asctime)s,%(msecs)d %(name)s %(levelname)s %(message)s'
    LOG_DATEFMT = '%H:%M:%S'

    def __init__(self, log_level=logging.INFO, log_to_file=True, log_to_console=True):
        self.__log_level = log_level
        self.__log_file = None
        self.__log_to_file = log_to_file
        self.__log_to_console = log_to_console

        self.__debug = False
        self.__profile = False

        self.__parser = ArgumentParser()
        self.__args = None
        self.__handlers = []
        self.__profiler = None
        self.__timestamp = datetime.now(timezone.utc).strftime('%Y%m%d%H%M%S')

    def __get_debug(self):
        return self.__debug

    debug = property(__get_debug)

    def __get_profile(self):
        return self.__profile

    profile = property(__get_profile)

    def __get_timestamp(self):
        return self.__timestamp

    timestamp = property(__get_timestamp)

    def __get_log_level(self):
        return self.__log_level

    def __set_log_level(self, value):
        self.__log_level = value

    log_level = property(__get_log_level, __set_log_level)

    def __get_log_file(self):
        return self.__log_file

    def __set_log_file(self, value):
        self.__log_file = value

    log_file = property(__get_log_file, __set_log_file)

    # region Arguments

    def add_arg(self, *args, **kwargs):
        self.__parser.add_argument(*args, **kwargs)

    def is_arg(self, name, args=None):
        args = args if args is not None else self.__args
        return args.get(name) is not None

    def get_arg(self, name, args=None, default=None):
        args = args if args is not None else self.__args
        value = args.get(name)
        return default if value is None or value == '' else value

    def _add_args(self):
        self.add_arg('--debug', action='store_true', help='Enable debug mode')
        self.add_arg('--profile', action='store_true', help='Enable performance profiler')
        self.add_arg('--log-level', type=str, help='Set log level')

    def _init_from_args(self, args):
        self.__debug = self.get_arg('debug', args, self.__debug)
        self.__profile = self.get_arg('profile', args, self.__profile)

        if self.is_arg('log_level', args):
            name = self.get_arg('log_level', args).upper()
            level = logging.getLevelName(name)
            if not isinstance(level, int):
                raise ValueError(f'Invalid log level `{name}`.')
            self.__log_level = level

        if self.__debug:
            self.__log_level = min(self.__log_level, logging.DEBUG)

    # endregion
    # region Logging

    def __start_logging(self):
        formatter = logging.Formatter(Script.LOG_FORMAT, datefmt=Script.LOG_DATEFMT)

        self.__handlers = []
        if self.__log_to_file and self.__log_file is not None:
            os.makedirs(os.path.dirname(os.path.abspath(self.__log_file)), exist_ok=True)
            self.__handlers.append(logging.FileHandler(self.__log_file, encoding='utf-8'))
        if self.__log_to_console:
            self.__handlers.append(logging.StreamHandler())

        root = logging.getLogger()
        root.handlers = []
        root.setLevel(self.__log_level)
        for h in self.__handlers:
            h.setFormatter(formatter)
            root.addHandler(h)

        logging.getLogger('matplotlib').setLevel(logging.WARNING)
        logger.propagate = True
        logger.setLevel(self.__log_level)

        if self.__log_file is not None:
            logger.info(f'Logging started to `{self.__log_file}`.')

    def __stop_logging(self):
        if self.__log_file is not None:
            logger.info(f'Logging finished to `{self.__log_file}`.')

        root = logging.getLogger()
        for h in self.__handlers:
            h.close()
        root.handlers = [logging.StreamHandler()]
        self.__handlers = []

    # endregion
    # region Profiler

    def __start_profiler(self):
        if self.__profile:
            import cProfile

            self.__profiler = cProfile.Profile()
            self.__profiler.enable()
            logger.info('Profiler started.')

    def __stop_profiler(self):
        if self.__profiler is None:
            return

        import pstats

        self.__profiler.disable()
        for fn, key in [('profile.cum.stats', 'cumulative'), ('profile.tot.stats', 'time')]:
            with open(fn, 'w') as f:
                pstats.Stats(self.__profiler, stream=f).sort_stats(key).print_stats()
        self.__profiler = None

        logger.info('Profiler stopped, results written to profile.*.stats.')

    # endregion

    def _dump_settings(self):
        """Save the arguments and the command-line next to the log file."""

        if not self.__log_to_file or self.__log_file is None:
            return

        def default(obj):
            if isinstance(obj, np.ndarray):
                return obj.tolist()
            elif isinstance(obj, np.generic):
                return obj.item()
            return '(not serialized)'

        logdir = os.path.dirname(os.path.abspath(self.__log_file))

        fn = os.path.join(logdir, f'args_{self.__timestamp}.json')
        with open(fn, 'w') as f:
            json.dump(self.__args, f, default=default, indent=4)
        logger.debug(f'Arguments saved to `{fn}`.')

        fn = os.path.join(logdir, f'command_{self.__timestamp}.sh')
        with open(fn, 'w') as f:
            f.write(' '.join([os.path.basename(sys.argv[0])] + sys.argv[1:]) + '\n')
        logger.debug(f'Command-line saved to `{fn}`.')

    def execute(self, argv=None):
        """Parse the arguments, run the script and return its exit code."""

        self._add_args()
        self.__args = vars(self.__parser.parse_args(argv))
        self._init_from_args(self.__args)

        # Debugging is started from the wrapper shell script
        self.prepare()

        self.__start_logging()
        self._dump_settings()
        self.__start_profiler()

        try:
            return self.run()
        finally:
            self.__stop_profiler()
            self.__stop_logging()

    def prepare(self):
        """Initializations after the arguments are parsed and before logging starts."""

        self.__log_file = f'{type(self).__name__.lower()}_{self.__timestamp}.log'

    def run(self):
        raise NotImplementedError()
