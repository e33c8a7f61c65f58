from dataclasses import dataclass
from collections import Counter
import numpy as np

from ..laberror import DomainError

PUNCTURE = None


@dataclass(frozen=True)
class Topology():
    """
    Surface type S_{g,n} with a pants decomposition. Every pants is a triple of
    boundary curve indices, `None` standing for a puncture. Interior curves
    appear exactly twice in the pants graph.
    """

    genus: int
    punctures: int
    pants_graph: tuple

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise DomainError(f'Invalid surface type ({self.genus}, {self.punctures}).')
        if 3 * self.genus - 3 + self.punctures < 1:
            raise DomainError(f'Surface type ({self.genus}, {self.punctures}) has no pants curves.')

        pants_graph = tuple(tuple(p) for p in self.pants_graph)
        object.__setattr__(self, 'pants_graph', pants_graph)

        if len(pants_graph) != 2 * self.genus - 2 + self.punctures:
            raise DomainError(
                f'Expected {2 * self.genus - 2 + self.punctures} pants, got {len(pants_graph)}.')

        counts = Counter(c for p in pants_graph for c in p)
        if counts.get(PUNCTURE, 0) != self.punctures:
            raise DomainError('Number of punctures in the pants graph does not match the surface type.')
        curves = sorted(c for c in counts if c is not PUNCTURE)
        if curves != list(range(self.curve_count)):
            raise DomainError(f'Pants curves must be numbered 0..{self.curve_count - 1}.')
        for c in curves:
            if counts[c] != 2:
                raise DomainError(f'Pants curve {c} is glued {counts[c]} times instead of twice.')

    @classmethod
    def genus2(cls):
        """Closed genus two surface cut along two non-separating curves and one separating curve."""
        return cls(2, 0, ((0, 0, 2), (1, 1, 2)))

    @classmethod
    def punctured_torus(cls):
        return cls(1, 1, ((0, 0, PUNCTURE),))

    @classmethod
    def from_dict(cls, d):
        return cls(int(d['genus']), int(d['punctures']),
                   tuple(tuple(PUNCTURE if c is None else int(c) for c in p) for p in d['pants_graph']))

    def to_dict(self):
        return dict(genus=self.genus, punctures=self.punctures,
                    pants_graph=[list(p) for p in self.pants_graph])

    def __get_curve_count(self):
        return 3 * self.genus - 3 + self.punctures

    curve_count = property(__get_curve_count)

    def __get_dimension(self):
        return 6 * self.genus - 6 + 2 * self.punctures

    dimension = property(__get_dimension)

    def __get_area(self):
        return 2 * np.pi * (2 * self.genus - 2 + self.punctures)

    area = property(__get_area)

    def __get_is_closed(self):
        return self.punctures == 0

    is_closed = property(__get_is_closed)

    def __get_is_supported(self):
        return (self.genus, self.punctures) in ((2, 0), (1, 1))

    is_supported = property(__get_is_supported)
