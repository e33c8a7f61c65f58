import logging

from ..laberror import ConfigError
from .config import Config
from .enumerationconfig import EnumerationConfig
from .rieraconfig import RieraConfig
from .flowconfig import FlowConfig
from .boundsconfig import BoundsConfig
from .samplingconfig import SamplingConfig
from .verifyconfig import VerifyConfig


class LabConfig(Config):
    """
    Run configuration of the command-line laboratory. A JSON or YAML file
    loaded with `--config` mirrors the command-line flags.
    """

    COMMANDS = ['systole', 'riera', 'gram', 'path', 'pinch', 'bounds', 'decay', 'verify']
    SPHERE_FACTORS = ['6g7', '6g6']

    def __init__(self):
        self.command = None
        self.input = None                                           # FN coordinate or path document
        self.outdir = self._get_env('WPLAB_OUTDIR', 'out')          # Output directory, must be writable
        self.logdir = None                                          # Defaults to <outdir>/log
        self.figdir = None                                          # Defaults to <outdir>/fig

        self.seed = 42
        self.tol = 1e-3
        self.budget = 2_000_000                                     # Maximum number of group elements
        self.radius = None                                          # Fixed Riera radius, schedule when None
        self.sphere_factor = '6g7'
        self.timestamps = False                                     # Timestamps in artifact headers

        # Command specific arguments
        self.alpha = None                                           # Curve word for riera
        self.beta = None
        self.curve = 0                                              # Pants curve index for pinch
        self.target = None                                          # Target length for pinch
        self.g_max = None                                           # Largest genus of the bounds table
        self.punctures = 0                                          # Punctures of the bounds table
        self.l_max = None                                           # Length cutoff of the class listing

        self.loglevel = logging.INFO
        self.trace_args = {
            'plot': True,
        }

        self.enumeration = EnumerationConfig()
        self.riera = RieraConfig()
        self.flow = FlowConfig()
        self.bounds = BoundsConfig()
        self.sampling = SamplingConfig()
        self.verify = VerifyConfig()

        super().__init__()

    def validate(self):
        if self.command is not None and self.command not in LabConfig.COMMANDS:
            raise ConfigError(f'Unknown command `{self.command}`.')
        if self.sphere_factor not in LabConfig.SPHERE_FACTORS:
            raise ConfigError(f'Invalid sphere factor `{self.sphere_factor}`.')
        if not isinstance(self.seed, int):
            raise ConfigError(f'Seed must be an integer, got `{self.seed}`.')
        if self.budget is None or self.budget <= 0:
            raise ConfigError('Budget must be positive.')
        if self.tol is None or self.tol <= 0:
            raise ConfigError('Tolerance must be positive.')
        if self.radius is not None and self.radius <= 0:
            raise ConfigError('Radius must be positive.')
        if self.riera.tail_model not in ('counting', 'area'):
            raise ConfigError(f'Unknown tail model `{self.riera.tail_model}`.')
        if self.punctures is None or self.punctures < 0:
            raise ConfigError(f'Number of punctures must be nonnegative, got `{self.punctures}`.')
        if self.g_max is not None and self.g_max < 2:
            raise ConfigError(f'Largest genus must be at least 2, got `{self.g_max}`.')
        if not 0 < self.bounds.epsilon < 3:
            raise ConfigError(f'Epsilon must be in (0, 3), got `{self.bounds.epsilon}`.')

        self.bounds.sphere_factor = self.sphere_factor
        self.riera.tolerance = self.tol
