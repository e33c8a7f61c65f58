import numpy as np

from ..setup_logger import logger
from ..laberror import NotPositiveDefinite, UnsupportedTopology
from ..config import EnumerationConfig, FlowConfig
from ..fuchsian import FNCoordinates, build_group

MIN_INDEPENDENCE = 1e-6

# Curves whose lengths serve as local coordinates. The pants curves come
# first, then transversals: `ab` and `cd` cross the first and second pants
# curve, the last one crosses the separating curve. A candidate symmetric
# under the reflection of the untwisted surface has zero twist derivative
# there, the first independent one is taken.
GENUS2_TRANSVERSALS = ('ab', 'cd')
GENUS2_SEPARATING_CANDIDATES = ('abd', 'abD', 'bcd', 'aBd', 'abcd', 'bd')
PUNCTURED_TORUS_TRANSVERSALS = ('ab',)


def word_lengths(fn: FNCoordinates, words, config: EnumerationConfig = None):
    grp = build_group(fn, config=config, with_domain=False)
    return np.array([grp.word_length(w) for w in words])


def length_jacobian(fn: FNCoordinates, words, step=1e-5, config: EnumerationConfig = None):
    """
    Derivatives of the word lengths with respect to the Fenchel-Nielsen vector
    (lengths, then twists) by central differences with a relative step.
    """

    x = fn.as_vector()
    jac = np.empty((len(words), x.size))
    for j in range(x.size):
        h = step * max(1.0, abs(x[j]))
        xp, xm = x.copy(), x.copy()
        xp[j] += h
        xm[j] -= h
        lp = word_lengths(FNCoordinates.from_vector(fn.topology, xp), words, config)
        lm = word_lengths(FNCoordinates.from_vector(fn.topology, xm), words, config)
        jac[:, j] = (lp - lm) / (2 * h)
    return jac


def independence_score(jacobian):
    """Smallest singular value of the length Jacobian."""
    return float(np.min(np.linalg.svd(jacobian, compute_uv=False)))


class CurveBasis():
    """
    Closed curves, given by words in the generators, whose lengths are local
    coordinates of Teichmueller space near a point.
    """

    def __init__(self, fn, words, jacobian):
        self.__fn = fn
        self.__words = tuple(words)
        self.__jacobian = jacobian
        self.__independence_score = independence_score(jacobian)

    def __get_fn(self):
        return self.__fn

    fn = property(__get_fn)

    def __get_words(self):
        return self.__words

    words = property(__get_words)

    def __get_size(self):
        return len(self.__words)

    size = property(__get_size)

    def __len__(self):
        return self.size

    def __get_jacobian(self):
        return self.__jacobian

    jacobian = property(__get_jacobian)

    def __get_independence_score(self):
        return self.__independence_score

    independence_score = property(__get_independence_score)

    def index(self, word):
        return self.__words.index(word)

    def curves(self, grp):
        """The basis curves as classes of the given group."""
        return [grp.geodesic_class(w) for w in self.__words]

    def lengths(self, fn, config: EnumerationConfig = None):
        return word_lengths(fn, self.__words, config)

    def jacobian_at(self, fn, flow: FlowConfig = None, config: EnumerationConfig = None):
        flow = flow if flow is not None else FlowConfig()
        return length_jacobian(fn, self.__words, flow.fd_step, config)

    def with_extra(self, word, flow: FlowConfig = None, config: EnumerationConfig = None):
        """Enlarged basis with one more, necessarily dependent, curve."""
        words = self.__words + (word,)
        flow = flow if flow is not None else FlowConfig()
        return CurveBasis(self.__fn, words, length_jacobian(self.__fn, words, flow.fd_step, config))

    @staticmethod
    def from_words(fn: FNCoordinates, words, flow: FlowConfig = None, config: EnumerationConfig = None):
        flow = flow if flow is not None else FlowConfig()
        basis = CurveBasis(fn, words, length_jacobian(fn, words, flow.fd_step, config))
        if len(words) != fn.dimension or basis.independence_score <= MIN_INDEPENDENCE:
            raise NotPositiveDefinite(f'Lengths of {list(words)} are not coordinates at {fn.as_vector()}.')
        return basis

    @staticmethod
    def standard(fn: FNCoordinates, flow: FlowConfig = None, config: EnumerationConfig = None):
        """
        Pants curves plus transversals. Raises NotPositiveDefinite when no
        candidate gives lengths that are independent at `fn`.
        """

        flow = flow if flow is not None else FlowConfig()
        grp = build_group(fn, config=config, with_domain=False)
        pants = [grp.pants_curve_words[i] for i in sorted(grp.pants_curve_words)]
        topology = fn.topology

        if (topology.genus, topology.punctures) == (2, 0):
            candidates = [pants + list(GENUS2_TRANSVERSALS) + [w] for w in GENUS2_SEPARATING_CANDIDATES]
        elif (topology.genus, topology.punctures) == (1, 1):
            candidates = [pants + list(PUNCTURED_TORUS_TRANSVERSALS)]
        else:
            raise UnsupportedTopology(
                f'No curve basis for surface type ({topology.genus}, {topology.punctures}).')

        best = None
        for words in candidates:
            basis = CurveBasis(fn, words, length_jacobian(fn, words, flow.fd_step, config))
            if best is None or basis.independence_score > best.independence_score:
                best = basis
            if basis.independence_score > 1e-3:
                break

        if best.independence_score <= MIN_INDEPENDENCE:
            raise NotPositiveDefinite(f'Curve lengths are not independent at {fn.as_vector()}, '
                                      f'score {best.independence_score:.3e}.')

        logger.debug(f'Curve basis {best.words} with independence score {best.independence_score:.4e}.')
        return best
