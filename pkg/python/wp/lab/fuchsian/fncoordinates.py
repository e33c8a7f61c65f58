from dataclasses import dataclass
import numpy as np

from ..laberror import DomainError, NonPositiveLength
from .topology import Topology


@dataclass(frozen=True)
class FNCoordinates():
    """
    Fenchel-Nielsen coordinates: hyperbolic lengths and twists (in length units)
    of the pants curves of `topology`.
    """

    topology: Topology
    lengths: tuple
    twists: tuple

    def __post_init__(self):
        lengths = tuple(float(x) for x in self.lengths)
        twists = tuple(float(x) for x in self.twists)
        object.__setattr__(self, 'lengths', lengths)
        object.__setattr__(self, 'twists', twists)

        n = self.topology.curve_count
        if len(lengths) != n or len(twists) != n:
            raise DomainError(f'Expected {n} lengths and twists, got {len(lengths)} and {len(twists)}.')
        if not all(np.isfinite(lengths)) or not all(np.isfinite(twists)):
            raise DomainError('Fenchel-Nielsen coordinates must be finite.')
        for i, l in enumerate(lengths):
            if l <= 0:
                raise NonPositiveLength(f'Length of pants curve {i} is {l}, must be positive.')

    @classmethod
    def genus2(cls, lengths, twists=(0.0, 0.0, 0.0)):
        return cls(Topology.genus2(), tuple(lengths), tuple(twists))

    @classmethod
    def punctured_torus(cls, length, twist=0.0):
        return cls(Topology.punctured_torus(), (length,), (twist,))

    @classmethod
    def from_vector(cls, topology, v):
        v = np.asarray(v, dtype=float)
        n = topology.curve_count
        return cls(topology, tuple(v[:n]), tuple(v[n:]))

    @classmethod
    def from_dict(cls, d):
        if d.get('pants_graph') is not None:
            topology = Topology.from_dict(d)
        elif (int(d['genus']), int(d.get('punctures', 0))) == (2, 0):
            topology = Topology.genus2()
        elif (int(d['genus']), int(d.get('punctures', 0))) == (1, 1):
            topology = Topology.punctured_torus()
        else:
            raise DomainError('A pants graph is required for this surface type.')

        twists = d.get('twists', [0.0] * len(d['lengths']))
        return cls(topology, tuple(d['lengths']), tuple(twists))

    def to_dict(self):
        d = self.topology.to_dict()
        d['lengths'] = list(self.lengths)
        d['twists'] = list(self.twists)
        return d

    def as_vector(self):
        return np.array(self.lengths + self.twists)

    def with_twists(self, twists):
        return FNCoordinates(self.topology, self.lengths, tuple(twists))

    def dehn_twist(self, curve, times=1):
        """Full Dehn twist along a pants curve, tau_i -> tau_i + l_i."""
        twists = list(self.twists)
        twists[curve] += times * self.lengths[curve]
        return self.with_twists(twists)

    def __get_dimension(self):
        return 2 * self.topology.curve_count

    dimension = property(__get_dimension)


def dehn_twist(fn: FNCoordinates, curve, times=1) -> FNCoordinates:
    return fn.dehn_twist(curve, times=times)
