import os
import traceback
import logging
try:
    import debugpy
except ModuleNotFoundError:
    debugpy = None

from .setup_logger import logger
from .util import Timer
from .config import LabConfig
from .labtrace import LabTrace
from .pipelineexception import PipelineException


class Pipeline():
    """
    Runs a list of steps in order. A step is a dictionary with a `name`, a
    `func` returning `(success, skip_remaining)` and a `critical` flag. An
    exception raised by a step is logged and collected; after a critical step
    the remaining steps are skipped.
    """

    def __init__(self, script, config: LabConfig, trace: LabTrace = None):
        self.__script = script
        self.__config = config
        self.__trace = trace

        self.__exceptions = []
        self.__tracebacks = []

        self._steps = None

    def __get_script(self):
        return self.__script

    script = property(__get_script)

    def __get_config(self):
        return self.__config

    config = property(__get_config)

    def __get_trace(self):
        return self.__trace

    trace = property(__get_trace)

    def __get_exceptions(self):
        return self.__exceptions

    exceptions = property(__get_exceptions)

    def __get_tracebacks(self):
        return self.__tracebacks

    tracebacks = property(__get_tracebacks)

    def validate_config(self):
        self.__config.validate()
        if not os.path.isdir(self.__config.outdir):
            logger.info(f'Output directory `{self.__config.outdir}` will be created.')

    def get_log_filename(self):
        return f'{self.__config.command}_{self.__script.timestamp}.log'

    def get_log_level(self):
        # The more verbose of the configured and the command-line level
        level = self.__config.loglevel
        if self.__script is not None:
            if self.__script.log_level is not None:
                level = min(level, self.__script.log_level)
            if self.__script.debug:
                level = min(level, logging.DEBUG)
        return level

    def _create_dir(self, name, dir):
        if not os.path.isdir(dir):
            os.makedirs(dir, exist_ok=True)
            logger.debug(f'Created {name} directory `{dir}`.')

    def execute(self):
        """Execute the steps and return `True` if all of them succeeded."""

        if self.__trace is not None:
            self.__trace.figdir = self.__config.figdir
            logger.debug(f'Figures are written to `{self.__config.figdir}`.')

        success = True
        for step in self._steps:
            ok, skip_remaining = self.__execute_step(step['name'], step['func'], step['critical'])
            success = success and ok
            if skip_remaining:
                break

        return success

    def __execute_step(self, name, func, critical):
        with Timer() as timer:
            try:
                logger.info(self._get_log_message_step_start(name))

                success, skip_remaining = func()
                if not success and critical:
                    raise PipelineException(f'Step `{name}` failed and is critical. Stopping.')

                logger.info(timer.format_message(self._get_log_message_step_stop(name)))
                return success, skip_remaining
            except Exception as ex:
                # Break into the debugger when one is attached
                if debugpy is not None and debugpy.is_client_connected():
                    raise ex

                logger.error(timer.format_message(self._get_log_message_step_error(name, ex)))
                logger.exception(ex)

                self.__exceptions.append(ex)
                self.__tracebacks.append(traceback.format_tb(ex.__traceback__))
                return False, critical

    def _get_log_message_step_start(self, name):
        return f'Executing step `{name}`'

    def _get_log_message_step_stop(self, name):
        return f'Step `{name}` completed successfully in {{:.3f}} sec.'

    def _get_log_message_step_error(self, name, ex):
        return f'Step `{name}` failed with error `{type(ex).__name__}`.'
