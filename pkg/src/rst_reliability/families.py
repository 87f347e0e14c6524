"""Named dense three-terminal graphs.

Vertex ``v_k`` of the usual 1-based naming is index ``k - 1``; r, s, t are
``v_1, v_2, v_3`` (indices 0, 1, 2).  Every constructor validates its
parameter range and raises ``ValueError`` outside it.
"""

from __future__ import annotations

from .graph import LabeledGraph, complete_graph, from_complete_minus


def _v(k: int) -> int:
    return k - 1


def family_A(n: int, l: int) -> LabeledGraph:
    """K_n minus a star of ``l`` edges centred at v4 (leaves v5..v_{l+4})."""
    if n < 7 or not 2 <= l <= n - 4:
        raise ValueError(f"A(n, l) needs n >= 7 and 2 <= l <= n-4, got n={n}, l={l}")
    return from_complete_minus(n, [(_v(4), _v(i + 3)) for i in range(2, l + 2)])


def family_Astar(n: int) -> LabeledGraph:
    """K_n minus the triangle v4 v5 v6."""
    if n < 7:
        raise ValueError(f"A*(n, 3) needs n >= 7, got n={n}")
    return from_complete_minus(n, [(_v(4), _v(5)), (_v(4), _v(6)), (_v(5), _v(6))])


def family_Aprime(n: int, l: int) -> LabeledGraph:
    """K_n minus the matching v4v5, v6v7, ..., v_{2l+2} v_{2l+3}."""
    if n < 7 or not 2 <= l <= (n - 3) // 2:
        raise ValueError(f"A'(n, l) needs n >= 7 and 2 <= l <= (n-3)//2, got n={n}, l={l}")
    return from_complete_minus(n, [(_v(2 * i), _v(2 * i + 1)) for i in range(2, l + 2)])


def _one_missing(n: int, pair, name: str) -> LabeledGraph:
    if n < 5:
        raise ValueError(f"{name}(n) needs n >= 5, got n={n}")
    return from_complete_minus(n, [pair])


def family_X(n: int) -> LabeledGraph:
    """K_n minus the target edge rs."""
    return _one_missing(n, (0, 1), "X")


def family_Y(n: int) -> LabeledGraph:
    """K_n minus the edge r v4."""
    return _one_missing(n, (0, _v(4)), "Y")


def family_Z(n: int) -> LabeledGraph:
    """K_n minus the non-target edge v4 v5."""
    return _one_missing(n, (_v(4), _v(5)), "Z")


def family_Kn(n: int) -> LabeledGraph:
    return complete_graph(n)


FAMILIES = {
    "A": (family_A, ("n", "l")),
    "Astar": (family_Astar, ("n",)),
    "Aprime": (family_Aprime, ("n", "l")),
    "X": (family_X, ("n",)),
    "Y": (family_Y, ("n",)),
    "Z": (family_Z, ("n",)),
    "Kn": (family_Kn, ("n",)),
}


def build_family(name: str, n: int, l: int | None = None) -> LabeledGraph:
    """Look up a constructor by its short name (``A``, ``Astar``, ``Aprime``, ``X``, ``Y``, ``Z``, ``Kn``)."""
    try:
        ctor, params = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    if "l" in params:
        if l is None:
            raise ValueError(f"family {name} needs l")
        return ctor(n, l)
    return ctor(n)
