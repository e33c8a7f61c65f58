import numpy as np

from ..laberror import DomainError
from ..config import EnumerationConfig, FlowConfig, RieraConfig
from ..fuchsian import FNCoordinates, build_group
from .curvebasis import CurveBasis, word_lengths
from .grammatrix import GramMatrix, gram_matrix


class MetricContext():
    """
    Configuration and caches shared by the path computations. Groups and Gram
    matrices are cached by the coordinate vector, since refinement and the
    flow revisit the same points.
    """

    def __init__(self, enumeration: EnumerationConfig = None, riera: RieraConfig = None,
                 flow: FlowConfig = None, budget=None):
        self.enumeration = enumeration if enumeration is not None else EnumerationConfig()
        self.riera = riera if riera is not None else RieraConfig()
        self.flow = flow if flow is not None else FlowConfig()
        self.budget = budget

        self.__groups = {}
        self.__grams = {}

    @staticmethod
    def __key(fn):
        return tuple(np.round(fn.as_vector(), 14))

    def group(self, fn: FNCoordinates):
        key = self.__key(fn)
        if key not in self.__groups:
            if self.budget is None:
                self.__groups[key] = build_group(fn, config=self.enumeration)
            else:
                self.__groups[key] = build_group(fn, config=self.enumeration, budget=self.budget)
        return self.__groups[key]

    def gram(self, fn: FNCoordinates, basis: CurveBasis) -> GramMatrix:
        key = (self.__key(fn), basis.words)
        if key not in self.__grams:
            self.__grams[key] = gram_matrix(fn, basis, grp=self.group(fn), riera=self.riera,
                                            config=self.enumeration, budget=self.budget)
        return self.__grams[key]

    def lengths(self, fn: FNCoordinates, words):
        return word_lengths(fn, words, self.enumeration)


def length_differential(fn: FNCoordinates, velocity, words, step, context: MetricContext):
    """
    Directional derivatives d_i = dl_i(v) of the word lengths along the
    coordinate velocity, by a central difference along v / |v|.
    """

    v = np.asarray(velocity, dtype=float)
    norm = float(np.linalg.norm(v))
    if norm == 0:
        return np.zeros(len(words))

    x = fn.as_vector()
    h = step * max(1.0, float(np.linalg.norm(x)))
    e = v / norm
    lp = context.lengths(FNCoordinates.from_vector(fn.topology, x + h * e), words)
    lm = context.lengths(FNCoordinates.from_vector(fn.topology, x - h * e), words)
    return (lp - lm) / (2 * h) * norm


def tangent_norm(fn: FNCoordinates, velocity, basis: CurveBasis, context: MetricContext = None, step=None):
    """
    Weil-Petersson norm of a coordinate velocity, sqrt(d^T G^-1 d), where d are
    the length differentials of the basis curves along the velocity and G is
    their Gram matrix.
    """

    context = context if context is not None else MetricContext()
    step = step if step is not None else context.flow.fd_step

    d = length_differential(fn, velocity, basis.words, step, context)
    if not np.any(d):
        return 0.0
    gram = context.gram(fn, basis)
    return float(np.sqrt(max(gram.inverse_form(d), 0.0)))


def dist_to_stratum_bound(fn: FNCoordinates, sigma):
    """Upper bound sqrt(2 pi sum l_alpha) on the distance to the stratum where the curves in `sigma` are pinched."""  # noqa: E501
    sigma = list(sigma)
    if not sigma:
        raise DomainError('The set of pinched curves must not be empty.')
    return float(np.sqrt(2 * np.pi * sum(fn.lengths[i] for i in sigma)))
