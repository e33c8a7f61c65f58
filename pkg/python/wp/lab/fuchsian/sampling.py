import numpy as np

from ..setup_logger import logger
from ..laberror import LabError
from ..config import SamplingConfig, EnumerationConfig
from .topology import Topology
from .fncoordinates import FNCoordinates
from .classenumerator import systole


def random_fn(topology: Topology, rng: np.random.Generator, sampling: SamplingConfig = None):
    """Lengths log-uniform in the configured range, twists uniform in [0, length]."""

    sampling = sampling if sampling is not None else SamplingConfig()
    lo, hi = sampling.length_range
    lengths = np.exp(rng.uniform(np.log(lo), np.log(hi), size=topology.curve_count))
    twists = rng.uniform(0.0, 1.0, size=topology.curve_count) * lengths
    return FNCoordinates(topology, tuple(lengths), tuple(twists))


def random_thick_fn(topology: Topology, rng: np.random.Generator,
                    sampling: SamplingConfig = None, config: EnumerationConfig = None):
    """
    Random point of the thick part: sample until the systole is at least the
    configured floor. Returns the coordinates together with the systole.
    """

    sampling = sampling if sampling is not None else SamplingConfig()
    for attempt in range(sampling.max_rejections):
        fn = random_fn(topology, rng, sampling)
        length, _ = systole(fn, config=config)
        if length >= sampling.systole_floor:
            logger.debug(f'Accepted random surface after {attempt + 1} attempts, systole {length:.6f}.')
            return fn, length

    raise LabError(f'No surface with systole above {sampling.systole_floor} found '
                   f'in {sampling.max_rejections} attempts.')
