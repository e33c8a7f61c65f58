import numpy as np

from ..setup_logger import logger
from ..laberror import BudgetExceeded
from ..hplane import MoebiusMap, dist_to_axis_slab_xy
from .words import free_reduce

KEY_QUANTUM = 1e-6


def canonical_sign(mats):
    """Flip signs so that the entry of largest magnitude is positive."""
    flat = mats.reshape(-1, 4)
    idx = np.argmax(np.abs(flat), axis=1)
    s = np.sign(flat[np.arange(flat.shape[0]), idx])
    s[s == 0] = 1
    return mats * s[:, None, None]


def element_keys(mats):
    q = np.round(canonical_sign(mats).reshape(-1, 4) / KEY_QUANTUM).astype(np.int64)
    return [row.tobytes() for row in q]


def cosh_displacement(mats):
    """cosh d(i, g i) = (a^2 + b^2 + c^2 + d^2) / 2 for unit determinant matrices."""
    return np.sum(mats**2, axis=(1, 2)) / 2


class ElementSet():
    """
    Group elements found by breadth-first search, stored as matrices together
    with a parent pointer and the generator appended to the parent, so that
    words are only spelled out on request.
    """

    def __init__(self, mats, parent, letter, generator_words):
        self.__mats = mats
        self.__parent = parent
        self.__letter = letter
        self.__generator_words = generator_words
        self.__cosh_disp = cosh_displacement(mats)
        self.__index = None

    def __get_mats(self):
        return self.__mats

    mats = property(__get_mats)

    def __get_count(self):
        return self.__mats.shape[0]

    count = property(__get_count)

    def __len__(self):
        return self.count

    def __get_cosh_disp(self):
        return self.__cosh_disp

    cosh_disp = property(__get_cosh_disp)

    def __get_traces(self):
        return self.__mats[:, 0, 0] + self.__mats[:, 1, 1]

    traces = property(__get_traces)

    def displacement(self, i=None):
        ch = self.__cosh_disp if i is None else self.__cosh_disp[i]
        return np.arccosh(np.maximum(ch, 1.0))

    def within(self, radius):
        """Indices of the elements moving the basepoint by at most `radius`."""
        return np.nonzero(self.__cosh_disp <= np.cosh(radius) * (1 + 1e-12))[0]

    def matrix(self, i):
        return MoebiusMap.from_matrix(self.__mats[i])

    def word(self, i):
        parts = []
        while i > 0:
            parts.append(self.__generator_words[self.__letter[i]])
            i = self.__parent[i]
        return free_reduce(''.join(reversed(parts)))

    def find(self, m):
        """Index of an element equal to `m` up to sign, or None."""
        if self.__index is None:
            self.__index = {k: i for i, k in enumerate(element_keys(self.__mats))}
        key = element_keys(np.asarray(m, dtype=float).reshape(1, 2, 2))[0]
        return self.__index.get(key)


def _conjugated_generators(generators, frame):
    gens = np.array([np.asarray(g.matrix if isinstance(g, MoebiusMap) else g, dtype=float)
                     for g, _ in generators])
    words = [w for _, w in generators]
    if frame is not None:
        f = frame.matrix
        fi = frame.inverse().matrix
        gens = np.einsum('ij,kjl,lm->kim', fi, gens, f)
    return gens, words


def _search(gens, words, accept, budget, description):
    """
    Breadth-first search by right multiplication with the generators, keeping
    the candidates for which `accept` returns true.
    """

    mats = [np.eye(2)[None, :, :]]
    parents = [np.array([0])]
    letters = [np.array([0])]
    seen = set(element_keys(mats[0]))
    count = 1

    frontier = mats[0]
    frontier_idx = np.array([0])
    while frontier.shape[0] > 0:
        k = gens.shape[0]
        cand = np.einsum('nij,kjl->nkil', frontier, gens).reshape(-1, 2, 2)
        cand_parent = np.repeat(frontier_idx, k)
        cand_letter = np.tile(np.arange(k), frontier.shape[0])

        mask = accept(cand)
        cand, cand_parent, cand_letter = cand[mask], cand_parent[mask], cand_letter[mask]

        new = []
        for i, key in enumerate(element_keys(cand)):
            if key not in seen:
                seen.add(key)
                new.append(i)
        new = np.array(new, dtype=int)

        frontier = cand[new]
        frontier_idx = np.arange(count, count + new.size)
        mats.append(frontier)
        parents.append(cand_parent[new])
        letters.append(cand_letter[new])
        count += new.size

        if count > budget:
            partial = ElementSet(np.concatenate(mats), np.concatenate(
                parents), np.concatenate(letters), words)
            raise BudgetExceeded(f'Element budget of {budget} exceeded {description}.', partial=partial)

    logger.debug(f'Enumerated {count} group elements {description}.')
    return ElementSet(np.concatenate(mats), np.concatenate(parents), np.concatenate(letters), words)


def enumerate_elements(generators, prune_radius, budget, frame=None):
    """
    Breadth-first enumeration of the group elements whose displacement of i
    stays within `prune_radius` along the way. `generators` is a list of
    (matrix, word) pairs closed under inversion. When `frame` is given the
    generators are conjugated by it first, which moves the basepoint to
    frame(i).
    """

    gens, words = _conjugated_generators(generators, frame)
    limit = np.cosh(prune_radius) * (1 + 1e-12)
    return _search(gens, words, lambda cand: cosh_displacement(cand) <= limit, budget,
                   f'within radius {prune_radius:.3f}')


def enumerate_near_slab(generators, center, length, depth, reach, budget, frame=None):
    """
    Breadth-first enumeration of the elements k for which the bound returned by
    `dist_to_axis_slab_xy` at k(center) stays within `reach`, that is the
    translates of a tile around `center` that may meet the points within
    `depth` of the imaginary axis between the geodesics |z| = 1 and
    |z| = e^length. Generators are conjugated by `frame` when given.
    """

    gens, words = _conjugated_generators(generators, frame)
    z0 = complex(center)

    def accept(cand):
        z = (cand[:, 0, 0] * z0 + cand[:, 0, 1]) / (cand[:, 1, 0] * z0 + cand[:, 1, 1])
        return dist_to_axis_slab_xy(z.real, z.imag, length, depth) <= reach

    return _search(gens, words, accept, budget, f'near the slab of depth {depth:.3f}')
