"""Finite supports of local expansions and their monomial valuations.

A series in the local coordinates of a stratum is tracked only through
its support, a finite set of exponent vectors in Z^r with nonnegative
entries.  Coefficients are treated as generic units: products add
supports pointwise (Minkowski sum) and sums take unions, with no
cancellation.  The monomial valuation attached to a weight tuple alpha
is the minimum of the linear form alpha . beta over the support, which
only depends on the dominance-minimal exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class Support:
    """Exponent support of a series at a stratum.

    >>> s = Support("e", ("A", "B"), frozenset({(1, 0), (0, 2)}))
    >>> sorted(s.exponents)
    [(0, 2), (1, 0)]
    """

    stratum: str
    vertices: tuple[str, ...]
    exponents: frozenset[tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "exponents", frozenset(tuple(b) for b in self.exponents)
        )
        if not self.exponents:
            raise DomainError("support must contain at least one exponent vector")
        r = len(self.vertices)
        for beta in self.exponents:
            if len(beta) != r:
                raise DomainError(
                    f"exponent vector {beta} has length {len(beta)}, expected {r}"
                )
            for b in beta:
                if not isinstance(b, int) or b < 0:
                    raise DomainError(
                        f"exponent vector {beta} has a non-integer or negative entry"
                    )


@dataclass(frozen=True)
class SeriesPair:
    """Numerator and denominator supports of a local expansion."""

    num: Support
    den: Support

    def __post_init__(self):
        if (
            self.num.stratum != self.den.stratum
            or self.num.vertices != self.den.vertices
        ):
            raise DomainError("numerator and denominator live on different strata")


@dataclass(frozen=True)
class AlphaVector:
    """Nonnegative rational weights on the vertices of a stratum.

    At least one entry must be positive; entries may be zero (the
    valuation then ignores those coordinates).
    """

    stratum: str
    alpha: dict[str, Fraction]

    def __post_init__(self):
        clean = {v: Fraction(a) for v, a in self.alpha.items()}
        object.__setattr__(self, "alpha", clean)
        if any(a < 0 for a in clean.values()):
            raise DomainError("alpha entries must be nonnegative")
        if not any(a > 0 for a in clean.values()):
            raise DomainError("alpha must have at least one positive entry")


def _check_match(s: Support, a: AlphaVector):
    if s.stratum != a.stratum or set(a.alpha) != set(s.vertices):
        raise DomainError(
            f"weight vector on stratum {a.stratum!r} does not match support "
            f"on stratum {s.stratum!r} with vertices {s.vertices}"
        )


def val(s: Support, a: AlphaVector) -> Fraction:
    """Monomial valuation: min over the support of the linear form alpha . beta.

    >>> from fractions import Fraction as F
    >>> s = Support("e", ("A", "B"), frozenset({(1, 0), (0, 2)}))
    >>> a = AlphaVector("e", {"A": F(1, 2), "B": F(1, 3)})
    >>> val(s, a)
    Fraction(1, 2)
    """
    _check_match(s, a)
    weights = [a.alpha[v] for v in s.vertices]
    return min(sum(w * b for w, b in zip(weights, beta)) for beta in s.exponents)


def reduce_support(s: Support) -> Support:
    """Drop every exponent vector coordinatewise dominated by another.

    Dominated vectors can never achieve the minimum of a nonnegative
    linear form strictly, so the valuation is unchanged.
    """
    kept = []
    exps = sorted(s.exponents)
    for beta in exps:
        if not any(other != beta and _dominates(other, beta) for other in exps):
            kept.append(beta)
    return Support(s.stratum, s.vertices, frozenset(kept))


def _dominates(low, high):
    return all(a <= b for a, b in zip(low, high))


def product(s1: Support, s2: Support) -> Support:
    """Support of a product of series: reduced Minkowski sum.

    >>> p = product(
    ...     Support("e", ("A", "B"), frozenset({(1, 0)})),
    ...     Support("e", ("A", "B"), frozenset({(0, 1)})),
    ... )
    >>> sorted(p.exponents)
    [(1, 1)]
    """
    _check_pair(s1, s2)
    mink = {
        tuple(a + b for a, b in zip(b1, b2))
        for b1 in s1.exponents
        for b2 in s2.exponents
    }
    return reduce_support(Support(s1.stratum, s1.vertices, frozenset(mink)))


def sum_supports(s1: Support, s2: Support) -> Support:
    """Support of a sum of series: reduced union (generic coefficients)."""
    _check_pair(s1, s2)
    return reduce_support(
        Support(s1.stratum, s1.vertices, s1.exponents | s2.exponents)
    )


def initial_support(s: Support, a: AlphaVector) -> frozenset[tuple[int, ...]]:
    """Exponents of the initial form: minimizers of alpha . beta in the reduced support."""
    reduced = reduce_support(s)
    _check_match(reduced, a)
    weights = [a.alpha[v] for v in reduced.vertices]
    scored = [
        (sum(w * b for w, b in zip(weights, beta)), beta) for beta in reduced.exponents
    ]
    lo = min(score for score, _ in scored)
    return frozenset(beta for score, beta in scored if score == lo)


def minkowski(e1, e2):
    """Plain Minkowski sum of two exponent sets (no reduction)."""
    return frozenset(
        tuple(a + b for a, b in zip(b1, b2)) for b1 in e1 for b2 in e2
    )


def _check_pair(s1: Support, s2: Support):
    if s1.stratum != s2.stratum or s1.vertices != s2.vertices:
        raise DomainError(
            f"supports live on different strata: {s1.stratum!r} vs {s2.stratum!r}"
        )
