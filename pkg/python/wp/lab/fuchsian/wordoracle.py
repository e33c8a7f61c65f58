import numpy as np

from ..config import EnumerationConfig
from .words import alphabet, invert_letter, invert_word, cyclic_reduce


def reduced_words(grp, max_length):
    """
    All freely reduced words up to `max_length` in the generators, with their
    matrices, built level by level.
    """

    letters = alphabet(''.join(sorted(grp.generators.keys())))
    gens = np.stack([grp.letter(x).matrix for x in letters])

    words = list(letters)
    mats = gens.copy()
    all_words, all_mats = list(words), [mats]
    for _ in range(max_length - 1):
        last = np.array([letters.index(w[-1]) for w in words])
        new_words, new_mats = [], []
        for j, x in enumerate(letters):
            keep = np.nonzero(last != letters.index(invert_letter(x)))[0]
            new_words.extend(words[i] + x for i in keep)
            new_mats.append(mats[keep] @ gens[j])
        words, mats = new_words, np.concatenate(new_mats)
        all_words.extend(words)
        all_mats.append(mats)

    return all_words, np.concatenate(all_mats)


def canonical_cyclic_word(word):
    """Smallest rotation of the cyclically reduced word or of its inverse."""
    w = cyclic_reduce(word)
    v = invert_word(w)
    return min(min(w[i:] + w[:i], v[i:] + v[:i]) for i in range(len(w)))


def axis_angles(mats):
    """
    Endpoints of the axes of hyperbolic matrices as boundary angles 2 arctan(x)
    in [0, 2 pi), infinity at pi. Returns an (n, 2) array.
    """

    a, b, c, d = mats[..., 0, 0], mats[..., 0, 1], mats[..., 1, 0], mats[..., 1, 1]  # noqa: F841
    s = np.sqrt(np.maximum((a + d)**2 - 4, 0.0))
    # Fixed points (a - d +- s) / 2c, the sign of the denominator only shifts by 2 pi
    p = np.mod(2 * np.arctan2(a - d + s, 2 * c), 2 * np.pi)
    q = np.mod(2 * np.arctan2(a - d - s, 2 * c), 2 * np.pi)
    return np.stack([p, q], axis=-1)


def _angle_gap(x, y):
    g = np.abs(x - y)
    return np.minimum(g, 2 * np.pi - g)


def same_axis_class(grp, g, h, conjugator_length, config: EnumerationConfig = None):
    """
    True if some k spelled by a reduced word of at most `conjugator_length`
    letters moves the axis of g onto the axis of h, in either orientation,
    and the two have the same translation length. Compares axis endpoints
    directly without using the group enumeration.
    """

    config = config if config is not None else EnumerationConfig()
    g, h = np.asarray(getattr(g, 'matrix', g)), np.asarray(getattr(h, 'matrix', h))
    lg = 2 * np.arccosh(abs(np.trace(g)) / 2)
    lh = 2 * np.arccosh(abs(np.trace(h)) / 2)
    if abs(lg - lh) > config.tie_tolerance:
        return False

    _, mats = reduced_words(grp, conjugator_length)
    mats = np.concatenate([np.eye(2)[None, :, :], mats])
    inv = np.linalg.inv(mats)
    angles = axis_angles(mats @ g @ inv)
    target = axis_angles(h)

    tol = config.dedup_tolerance
    direct = (_angle_gap(angles[:, 0], target[0]) <= tol) & (_angle_gap(angles[:, 1], target[1]) <= tol)
    swapped = (_angle_gap(angles[:, 0], target[1]) <= tol) & (_angle_gap(angles[:, 1], target[0]) <= tol)
    return bool(np.any(direct | swapped))


def naive_systole(grp, max_length, config: EnumerationConfig = None, conjugator_length=4):
    """
    Systole by brute force over reduced words, without the Dirichlet domain.
    Returns the shortest length and one word per class. Cyclic rotations are
    merged by `canonical_cyclic_word`, the remaining candidates by comparing
    axes under conjugation with `same_axis_class`.
    """

    config = config if config is not None else EnumerationConfig()
    words, mats = reduced_words(grp, max_length)

    tr = np.abs(mats[:, 0, 0] + mats[:, 1, 1])
    hyperbolic = tr > 2 + config.hyperbolic_tolerance
    lengths = np.full(tr.shape, np.inf)
    lengths[hyperbolic] = 2 * np.arccosh(tr[hyperbolic] / 2)

    shortest = float(np.min(lengths))
    candidates = sorted({canonical_cyclic_word(words[i])
                         for i in np.nonzero(lengths <= shortest + config.tie_tolerance)[0]})

    classes = []
    for w in candidates:
        g = grp.evaluate(w)
        if not any(same_axis_class(grp, g, grp.evaluate(v), conjugator_length, config=config) for v in classes):  # noqa: E501
            classes.append(w)

    return shortest, classes
