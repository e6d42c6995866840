"""Small shared helpers: canonical ordering of ids and vertex sets."""

from itertools import chain, combinations


def idkey(x):
    """Total order on vertex/edge/node ids (ints sort before strings)."""
    if isinstance(x, bool):
        raise TypeError("bool is not a valid id")
    if isinstance(x, int):
        return (0, x, "")
    if isinstance(x, str):
        return (1, 0, x)
    raise TypeError(f"ids must be int or str, got {type(x).__name__}")


def check_id(x):
    idkey(x)
    return x


def setkey(s):
    """Sort key for a set of ids: element tuple in canonical order."""
    return tuple(sorted((idkey(x) for x in s)))


def sorted_ids(xs):
    return sorted(xs, key=idkey)


def subsets(xs, min_size=0, max_size=None):
    """All subsets of the id collection xs, smallest first, canonical order."""
    xs = sorted_ids(xs)
    if max_size is None:
        max_size = len(xs)
    return chain.from_iterable(
        combinations(xs, r) for r in range(min_size, max_size + 1)
    )
