"""Log canonical thresholds from the dual complex of a log resolution.

A log resolution of a pair presents the pulled-back divisor as
sum(N_i E_i) with snc support and the relative canonical divisor as
sum((mu_i - 1) E_i).  A quasi-monomial valuation through a stratum is a
nonnegative weight tuple alpha, not normalized: its log discrepancy is
sum(alpha_j mu_j), its order on the divisor sum(alpha_j N_j), and the
ratio of the two is scale-invariant with infimum the log canonical
threshold min over components of mu_i / N_i.

Background: for an isolated singularity this ratio is the weight of the
associated relative volume form at the corresponding point of the link,
so the minimality locus computed here matches the minimal-weight
skeleton of that form; the identification map between the two pictures
is deliberately not implemented, only the numerics on each side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .essential import Subcomplex, subcomplex
from .model import KIND_LOG_RESOLUTION, SncdModel, connected_components


@dataclass(frozen=True)
class QuasiMonomialPoint:
    """Unnormalized nonnegative weights on the vertices of a stratum."""

    stratum: str
    alpha: dict[str, Fraction]

    def __post_init__(self):
        object.__setattr__(
            self, "alpha", {v: Fraction(a) for v, a in self.alpha.items()}
        )


def _check(model: SncdModel, x: QuasiMonomialPoint):
    if model.kind != KIND_LOG_RESOLUTION:
        raise DomainError(
            f"quasi-monomial weights need a log-resolution model, got kind "
            f"{model.kind!r}"
        )
    s = model.stratum(x.stratum)
    if set(x.alpha) != set(s.vertices):
        raise DomainError(
            f"weights {sorted(x.alpha)} do not match the vertices "
            f"{list(s.vertices)} of stratum {x.stratum!r}"
        )
    if any(a < 0 for a in x.alpha.values()):
        raise DomainError("weights must be nonnegative")
    if not any(a > 0 for a in x.alpha.values()):
        raise DomainError("weights must not all vanish")


def _require_log_resolution(model: SncdModel):
    if model.kind != KIND_LOG_RESOLUTION:
        raise DomainError(
            f"operation needs a log-resolution model, got kind {model.kind!r}"
        )


def lct(model: SncdModel) -> Fraction:
    """Log canonical threshold: min over components of mu_i / N_i.

    >>> from .complexes import graph_model
    >>> node = graph_model("log-resolution", 1, 2,
    ...                    [("A", "A", 1, 1), ("B", "B", 1, 1)],
    ...                    [("e_A_B", "A", "B")])
    >>> lct(node)
    Fraction(1, 1)
    """
    _require_log_resolution(model)
    if not model.components:
        raise DomainError("model has no components")
    return min(Fraction(c.mu, c.N) for c in model.components)


def log_discrepancy(model: SncdModel, x: QuasiMonomialPoint) -> Fraction:
    """sum(alpha_j * mu_j): the log discrepancy of the valuation."""
    _check(model, x)
    return sum(
        x.alpha[v] * model.component(v).mu
        for v in model.stratum(x.stratum).vertices
    )


def intersection_order(model: SncdModel, x: QuasiMonomialPoint) -> Fraction:
    """sum(alpha_j * N_j): the valuation of the resolved divisor."""
    _check(model, x)
    return sum(
        x.alpha[v] * model.component(v).N
        for v in model.stratum(x.stratum).vertices
    )


def weight_qm(model: SncdModel, x: QuasiMonomialPoint) -> Fraction:
    """Weight of a quasi-monomial valuation, normalized by the divisor order.

    Scale-invariant in alpha, always at least lct(model), with equality
    exactly when every vertex carrying positive weight has the minimal
    ratio.
    """
    _check(model, x)
    s = model.stratum(x.stratum)
    num = Fraction(0)
    den = Fraction(0)
    for v in s.vertices:
        c = model.component(v)
        num += x.alpha[v] * c.mu
        den += x.alpha[v] * c.N
    return num / den


def sk_pair(model: SncdModel) -> Subcomplex:
    """Strata all of whose vertices realize the threshold ratio; face-closed."""
    lo = lct(model)
    chosen = [
        s.id
        for s in model.strata
        if all(
            Fraction(model.component(v).mu, model.component(v).N) == lo
            for v in s.vertices
        )
    ]
    return subcomplex(model, chosen)


def connectedness_report(model: SncdModel) -> list[tuple[frozenset[str], bool]]:
    """For each connected component of the complex, whether the threshold
    locus inside it is nonempty and connected.

    Blocks are listed by their smallest stratum id; pairs carry the
    block's full stratum set and the connectivity verdict.
    """
    pair = sk_pair(model)
    blocks = connected_components(model, [s.id for s in model.strata])
    out = []
    for block in blocks:
        inside = sorted(pair.strata & block)
        ok = bool(inside) and len(connected_components(model, inside)) == 1
        out.append((block, ok))
    return out
