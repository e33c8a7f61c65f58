from dataclasses import dataclass

from ..hplane import MoebiusMap, GeodesicLine


@dataclass(frozen=True)
class GeodesicClass():
    """
    Conjugacy class of a hyperbolic element, taken up to inversion, i.e. an
    unoriented closed geodesic. The representative is chosen with its axis
    passing within the Dirichlet domain radius of the basepoint.
    """

    word: str
    matrix: MoebiusMap
    length: float
    axis: GeodesicLine
    primitive: bool = True
    axis_distance: float = 0.0          # Distance of the axis from the basepoint i

    def __get_trace(self):
        return self.matrix.abs_trace

    trace = property(__get_trace)

    def to_record(self):
        return dict(word=self.word, trace=self.trace, length=self.length,
                    axis_p=self.axis.p, axis_q=self.axis.q, primitive=self.primitive)
