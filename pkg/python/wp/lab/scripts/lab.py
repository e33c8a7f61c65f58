#!/usr/bin/env python3

import os
import sys
import logging

from .script import Script
from ..setup_logger import logger
from ..laberror import LabError, ConfigError
from ..config import Config, LabConfig
from ..pipelineexception import PipelineException

# Exit codes
EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_BUDGET = 4


class Lab(Script):
    """
    Command-line front end of the laboratory. Runs one command on an input
    document and writes CSV and JSON artifacts with metadata headers and SVG
    figures to the output directory.
    """

    def __init__(self):
        super().__init__()

        self.__config = None
        self.__document = None
        self.__pipeline = None

    def __get_config(self):
        return self.__config

    config = property(__get_config)

    def __get_pipeline(self):
        return self.__pipeline

    pipeline = property(__get_pipeline)

    def _add_args(self):
        super()._add_args()

        self.add_arg('command', type=str, choices=LabConfig.COMMANDS, help='Command to run')
        self.add_arg('--config', type=str, nargs='*', help='Configuration file(s), JSON or YAML')
        self.add_arg('--input', type=str, help='Input document with a surface or a path')
        self.add_arg('--out', type=str, help='Output directory')
        self.add_arg('--seed', type=int, help='Random seed')
        self.add_arg('--tol', type=float, help='Width of the pairing intervals')
        self.add_arg('--budget', type=int, help='Maximum number of group elements')
        self.add_arg('--radius', type=float, help='Fixed truncation radius of the pairing sums')
        self.add_arg('--paper-sphere-factor', type=str, choices=LabConfig.SPHERE_FACTORS,
                     help='Exponent convention of the sphere volume factor')
        self.add_arg('--timestamps', action='store_true', help='Write creation time into artifact headers')
        self.add_arg('--alpha', type=str, help='First curve word of the pairing')
        self.add_arg('--beta', type=str, help='Second curve word of the pairing')
        self.add_arg('--curve', type=int, help='Pants curve to pinch')
        self.add_arg('--target', type=float, help='Target length of the pinched curve')
        self.add_arg('--g-max', type=int, help='Largest genus of the bounds table')
        self.add_arg('--punctures', type=int, help='Number of punctures of the bounds table')
        self.add_arg('--l-max', type=float, help='List all classes up to this length')
        self.add_arg('--oracle-length', type=int, help='Longest word of the brute-force systole oracle')
        self.add_arg('--no-plot', action='store_true', help='Do not write figures')

    def _init_from_args(self, args):
        super()._init_from_args(args)

        config = LabConfig()
        if self.is_arg('config', args):
            files = self.get_arg('config', args)
            try:
                config.load(files, ignore_collisions=True)
            except (LabError, ValueError, FileNotFoundError):
                raise
            except Exception as ex:
                # commentjson reports syntax errors with its own exception type
                raise ConfigError(f'Configuration file `{files}` cannot be parsed: {ex}') from ex

        # Command-line flags override the configuration files
        config.command = self.get_arg('command', args)
        config.input = self.get_arg('input', args, config.input)
        config.outdir = self.get_arg('out', args, config.outdir)
        config.seed = self.get_arg('seed', args, config.seed)
        config.tol = self.get_arg('tol', args, config.tol)
        config.budget = self.get_arg('budget', args, config.budget)
        config.radius = self.get_arg('radius', args, config.radius)
        config.sphere_factor = self.get_arg('paper_sphere_factor', args, config.sphere_factor)
        config.timestamps = self.get_arg('timestamps', args, False) or config.timestamps
        config.alpha = self.get_arg('alpha', args, config.alpha)
        config.beta = self.get_arg('beta', args, config.beta)
        config.curve = self.get_arg('curve', args, config.curve)
        config.target = self.get_arg('target', args, config.target)
        config.g_max = self.get_arg('g_max', args, config.g_max)
        config.punctures = self.get_arg('punctures', args, config.punctures)
        config.l_max = self.get_arg('l_max', args, config.l_max)
        config.verify.oracle_word_length = self.get_arg(
            'oracle_length', args, config.verify.oracle_word_length)
        if self.get_arg('no_plot', args, False):
            config.trace_args['plot'] = False
        config.loglevel = self.log_level

        config.logdir = config.logdir or os.path.join(config.outdir, 'log')
        config.figdir = config.figdir or os.path.join(config.outdir, 'fig')
        config.validate()

        self.__config = config
        self.__document = self.__load_document(config.input)

    def __load_document(self, path):
        """Parse the input document before anything is written."""

        if path is None:
            return {}
        if not os.path.isfile(path):
            raise ConfigError(f'Input file `{path}` does not exist.')
        try:
            doc = Config.load_dict(path)
        except Exception as ex:
            raise ConfigError(f'Input file `{path}` cannot be parsed: {ex}') from ex
        if not isinstance(doc, dict):
            raise ConfigError(f'Input file `{path}` does not contain a dictionary.')
        return doc

    def prepare(self):
        super().prepare()

        from ..labtrace import LabTrace

        trace = LabTrace(figdir=self.__config.figdir)
        trace.init_from_args(self.__config.trace_args)

        if self.__config.command == 'verify':
            from ..verifypipeline import VerifyPipeline
            self.__pipeline = VerifyPipeline(script=self, config=self.__config, trace=trace)
        else:
            from ..labpipeline import LabPipeline
            self.__pipeline = LabPipeline(script=self, config=self.__config,
                                          trace=trace, document=self.__document)

        self.log_level = self.__pipeline.get_log_level()
        self.log_file = os.path.join(self.__config.logdir, self.__pipeline.get_log_filename())

    def run(self):
        logger.info(f'Running command `{self.__config.command}` with seed {self.__config.seed}.')
        if self.__config.config_files:
            logger.info(f'Using configuration file(s) `{self.__config.config_files}`.')

        self.__pipeline.validate_config()
        success = self.__pipeline.execute()

        if self.__config.command == 'verify':
            self.__pipeline.save()
            success = success and self.__pipeline.verdict

        return exit_code(self.__pipeline.exceptions, success)


def exit_code(exceptions, success):
    """Exit code of the first error, or of the overall outcome."""

    for ex in exceptions:
        if isinstance(ex, LabError):
            return ex.exit_code
        elif isinstance(ex, (ValueError, FileNotFoundError)):
            return EXIT_CONFIG
        elif not isinstance(ex, PipelineException):
            return EXIT_FAILURE

    return EXIT_SUCCESS if success else EXIT_NUMERICAL


def main(argv=None):
    script = Lab()
    try:
        code = script.execute(argv)
    except LabError as ex:
        logging.getLogger().error(f'{type(ex).__name__}: {ex}')
        code = ex.exit_code
    except (ValueError, FileNotFoundError) as ex:
        logging.getLogger().error(f'Invalid configuration: {ex}')
        code = EXIT_CONFIG
    sys.exit(code)


if __name__ == "__main__":
    main()
