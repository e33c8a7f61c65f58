import numpy as np

from ..laberror import DomainError
from ..hplane import MoebiusMap, UHPoint, apply, dist, translation_length, axis_and_length, \
    dist_to_geodesic, dist_to_imaginary_axis
from .geodesicclass import GeodesicClass
from .words import alphabet, invert_letter
from .elementset import enumerate_elements, enumerate_near_slab


class SurfaceGroup():
    """
    Discrete representation of a surface group: named generators, the words of
    the pants curves, and the Dirichlet domain at the basepoint i that certifies
    enumeration.
    """

    def __init__(self, fn, generators, pants_curve_words, relation_residual, domain=None, budget=None):
        self.__fn = fn                                      # Fenchel-Nielsen coordinates the group was built from  # noqa: E501
        self.__generators = generators                      # Letter -> MoebiusMap, lower case only
        self.__pants_curve_words = pants_curve_words        # Pants curve index -> word
        self.__relation_residual = relation_residual
        self.__domain = domain                              # DirichletDomain, set by the builder
        self.__budget = budget

    def __get_fn(self):
        return self.__fn

    fn = property(__get_fn)

    def __get_topology(self):
        return self.__fn.topology

    topology = property(__get_topology)

    def __get_generators(self):
        return self.__generators

    generators = property(__get_generators)

    def __get_pants_curve_words(self):
        return self.__pants_curve_words

    pants_curve_words = property(__get_pants_curve_words)

    def __get_relation_residual(self):
        return self.__relation_residual

    relation_residual = property(__get_relation_residual)

    def __get_domain(self):
        return self.__domain

    def __set_domain(self, value):
        self.__domain = value

    domain = property(__get_domain, __set_domain)

    def __get_base_domain_radius(self):
        return self.__domain.radius if self.__domain is not None else np.inf

    base_domain_radius = property(__get_base_domain_radius)

    def __get_certified(self):
        return self.__domain is not None and not self.__domain.cusp_truncated

    certified = property(__get_certified)

    def __get_budget(self):
        return self.__budget

    def __set_budget(self, value):
        self.__budget = value

    budget = property(__get_budget, __set_budget)

    def letter(self, x):
        if x.islower():
            return self.__generators[x]
        else:
            return self.__generators[invert_letter(x)].inverse()

    def evaluate(self, word):
        m = np.eye(2)
        for x in word:
            m = m @ self.letter(x).matrix
        return MoebiusMap.from_matrix(m)

    def pants_curve(self, i):
        return self.evaluate(self.__pants_curve_words[i])

    def standard_generators(self):
        """Generators and their inverses as (matrix, word) pairs."""
        return [(self.letter(x).matrix, x) for x in alphabet(''.join(sorted(self.__generators.keys())))]

    def enumerate_elements(self, radius, frame: MoebiusMap = None, budget=None):
        """
        All elements g with d(b, g b) <= radius where b = frame(i), or b = i
        without a frame. Matrices are returned conjugated by the frame. The
        search walks products of side pairings and prunes at radius plus the
        domain radius plus twice the basepoint offset.
        """

        budget = budget if budget is not None else self.__budget
        offset = 0.0
        if frame is not None:
            offset = dist(UHPoint(0.0, 1.0), apply(frame, UHPoint(0.0, 1.0)))

        prune = radius + self.base_domain_radius + 2 * offset + 1e-6
        return enumerate_elements(self.__domain.side_pairings(), prune, budget, frame=frame)

    def enumerate_slab(self, length, depth, frame: MoebiusMap, budget=None):
        """
        Elements k, conjugated by the frame, whose translate of the Dirichlet
        domain may meet the points within `depth` of the imaginary axis lying
        between the geodesics |z| = 1 and |z| = e^length in frame coordinates.
        The domain center frame^-1(i) must project onto the axis between i and
        e^length i, as it does for `axis_frame` through i.
        """

        budget = budget if budget is not None else self.__budget
        center = apply(frame.inverse(), UHPoint(0.0, 1.0))
        if not 1 - 1e-9 <= center.r <= np.exp(length) * (1 + 1e-9):
            raise DomainError(f'Domain center {center.z} does not project onto the slab.')

        # Tiles meeting the neighbourhood of the slab that contains the domain center
        offset = max(dist_to_imaginary_axis(center) - depth, 0.0)
        reach = self.base_domain_radius + offset + 1e-6
        return enumerate_near_slab(self.__domain.side_pairings(), center.z, length, depth, reach, budget,
                                   frame=frame)

    def max_generator_displacement(self):
        return max(np.arccosh(np.sum(g**2) / 2) for g, _ in self.standard_generators())

    def word_length(self, word):
        """Translation length of the element spelled by `word`."""
        return translation_length(self.evaluate(word))

    def geodesic_class(self, word):
        m = self.evaluate(word)
        axis, length = axis_and_length(m)
        return GeodesicClass(word=word, matrix=m, length=length, axis=axis,
                             axis_distance=dist_to_geodesic(UHPoint(0.0, 1.0), axis))
