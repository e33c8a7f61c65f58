import numpy as np

from ..setup_logger import logger
from ..laberror import NotPositiveDefinite
from ..config import RieraConfig, EnumerationConfig
from ..fuchsian import FNCoordinates, build_group
from ..riera import grad_pairing
from .curvebasis import CurveBasis


class GramMatrix():
    """
    Weil-Petersson Gram matrix of the length gradients of a curve basis. The
    matrix is the symmetrized midpoint of the pairing intervals. Eigenvalues
    up to the widest interval are treated as noise by `inverse_form`, which
    makes it a pseudo-inverse form for dependent curve sets.
    """

    def __init__(self, words, lo, hi):
        self.__words = tuple(words)
        self.__lo = lo
        self.__hi = hi

        mid = 0.5 * (lo + hi)
        self.__asymmetry = float(np.max(np.abs(mid - mid.T)))
        self.__matrix = 0.5 * (mid + mid.T)
        self.__eigenvalues, self.__eigenvectors = np.linalg.eigh(self.__matrix)
        self.__noise = float(np.max(hi - lo)) if np.size(lo) > 0 else 0.0

    def __get_words(self):
        return self.__words

    words = property(__get_words)

    def __get_matrix(self):
        return self.__matrix

    matrix = property(__get_matrix)

    def __get_lo(self):
        return self.__lo

    lo = property(__get_lo)

    def __get_hi(self):
        return self.__hi

    hi = property(__get_hi)

    def __get_asymmetry(self):
        return self.__asymmetry

    asymmetry = property(__get_asymmetry)

    def __get_min_eigenvalue(self):
        return float(self.__eigenvalues[0])

    min_eigenvalue = property(__get_min_eigenvalue)

    def __get_condition_number(self):
        if self.__eigenvalues[0] <= 0:
            return np.inf
        return float(self.__eigenvalues[-1] / self.__eigenvalues[0])

    condition_number = property(__get_condition_number)

    def solve(self, d):
        return np.linalg.solve(self.__matrix, d)

    def inverse_form(self, d):
        """d^T G^-1 d over the eigenvalues above the interval noise."""
        d = np.asarray(d, dtype=float)
        keep = self.__eigenvalues > max(self.__noise, 0.0)
        c = self.__eigenvectors[:, keep].T @ d
        return float(np.sum(c**2 / self.__eigenvalues[keep]))


def gram_matrix(fn: FNCoordinates, basis: CurveBasis, tol=None, grp=None,
                riera: RieraConfig = None, config: EnumerationConfig = None, budget=None,
                check=True) -> GramMatrix:
    """
    Pairings of all basis curves at `fn`, each to the interval width `tol`.
    Raises NotPositiveDefinite when the symmetrized matrix is not positive
    definite, unless `check` is off for a dependent curve set.
    """

    riera = riera if riera is not None else RieraConfig()
    if tol is not None:
        riera = riera.copy()
        riera.tolerance = tol
    if grp is None:
        grp = build_group(fn, config=config) if budget is None else build_group(
            fn, config=config, budget=budget)

    curves = basis.curves(grp)
    n = len(curves)
    lo, hi = np.zeros((n, n)), np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            r = grad_pairing(grp, curves[i], curves[j], config=riera, budget=budget)
            lo[i, j], hi[i, j] = r.lo, r.hi

    gram = GramMatrix(basis.words, lo, hi)
    logger.debug(f'Gram matrix of {basis.words}: min eigenvalue {gram.min_eigenvalue:.6e}, '
                 f'condition number {gram.condition_number:.3e}, asymmetry {gram.asymmetry:.3e}.')

    if check and gram.min_eigenvalue <= 0:
        raise NotPositiveDefinite(f'Gram matrix of {basis.words} has eigenvalue {gram.min_eigenvalue:.3e}.')

    return gram
