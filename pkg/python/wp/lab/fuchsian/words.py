"""
Words in the generators of a surface group. Lower case letters are generators,
upper case letters their inverses.
"""


def invert_letter(x):
    return x.lower() if x.isupper() else x.upper()


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == invert_letter(x):
            out.pop()
        else:
            out.append(x)
    return ''.join(out)


def invert_word(word):
    return ''.join(invert_letter(x) for x in reversed(word))


def cyclic_reduce(word):
    w = free_reduce(word)
    while len(w) > 1 and w[0] == invert_letter(w[-1]):
        w = w[1:-1]
    return w


def alphabet(letters):
    """Generators followed by their inverses, e.g. `ab` -> `abAB`."""
    return letters + letters.upper()
