"""Points of the dual complex and the weight function.

The skeleton of a model is the geometric realization of its dual
complex.  A point on the open face of a stratum is a tuple of positive
rational weights alpha on the stratum's vertices, normalized against
the component multiplicities by sum(alpha_j * N_j) = 1 (the uniformizer
has valuation one).  Barycentric coordinates w_j = alpha_j * N_j give
the simplicial picture of the same point.

The weight of a point is sum(alpha_j * mu_j) on faces without local
expansion data; with an expansion (num, den) for the tracked form it is
val(num) - val(den) + m * sum(alpha_j), which agrees with the plain
formula whenever the expansion is a unit times the monomial carrying
the declared multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .model import SncdModel, Stratum, face
from .series import AlphaVector, val

CLASS_AFFINE = "affine"
CLASS_CONCAVE = "concave"
CLASS_CONVEX = "convex"
CLASS_UNKNOWN = "unknown"


@dataclass(frozen=True)
class SkeletonPoint:
    """A point on the open face of a stratum, in alpha coordinates."""

    stratum: str
    alpha: dict[str, Fraction]

    def __post_init__(self):
        object.__setattr__(
            self, "alpha", {v: Fraction(a) for v, a in self.alpha.items()}
        )


@dataclass(frozen=True)
class BarycentricPoint:
    """The same point in barycentric coordinates (positive, summing to 1)."""

    stratum: str
    w: dict[str, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "w", {v: Fraction(a) for v, a in self.w.items()})


@dataclass(frozen=True)
class PointSpec:
    """A point given by its reduction stratum and its values on the components.

    values records the valuation of each component through the center;
    entries may be zero, in which case the point lives on the face
    spanned by the positive ones.
    """

    center: str
    values: dict[str, Fraction]

    def __post_init__(self):
        object.__setattr__(
            self, "values", {v: Fraction(a) for v, a in self.values.items()}
        )


def _stratum_and_check(model: SncdModel, stratum_id: str, keys) -> Stratum:
    s = model.stratum(stratum_id)
    if set(keys) != set(s.vertices):
        raise DomainError(
            f"coordinates {sorted(keys)} do not match the vertices "
            f"{list(s.vertices)} of stratum {stratum_id!r}"
        )
    return s


def check_point(model: SncdModel, x: SkeletonPoint) -> None:
    """Raise unless x is a well-formed normalized point of the model."""
    s = _stratum_and_check(model, x.stratum, x.alpha)
    if any(a <= 0 for a in x.alpha.values()):
        raise DomainError(f"point on stratum {x.stratum!r} has a non-positive weight")
    total = sum(x.alpha[v] * model.component(v).N for v in s.vertices)
    if total != 1:
        raise DomainError(
            f"point on stratum {x.stratum!r} is not normalized: "
            f"sum(alpha * N) = {total}"
        )


def embed(model: SncdModel, p: BarycentricPoint) -> SkeletonPoint:
    """Convert barycentric coordinates to normalized alpha coordinates.

    alpha_j = w_j / N_j; the normalization sum(alpha_j * N_j) = 1 is
    then automatic from sum(w_j) = 1.

    >>> from fractions import Fraction as F
    >>> from .complexes import graph_model
    >>> mdl = graph_model("sncd-over-dvr", 1, 2,
    ...                   [("A", "A", 2, 1), ("B", "B", 3, 1)],
    ...                   [("e", "A", "B")])
    >>> x = embed(mdl, BarycentricPoint("e", {"A": F(1, 2), "B": F(1, 2)}))
    >>> x.alpha["A"], x.alpha["B"]
    (Fraction(1, 4), Fraction(1, 6))
    """
    s = _stratum_and_check(model, p.stratum, p.w)
    if any(w <= 0 for w in p.w.values()):
        raise DomainError("barycentric coordinates must be positive")
    if sum(p.w.values()) != 1:
        raise DomainError(
            f"barycentric coordinates must sum to 1, got {sum(p.w.values())}"
        )
    alpha = {v: p.w[v] / model.component(v).N for v in s.vertices}
    return SkeletonPoint(p.stratum, alpha)


def to_barycentric(model: SncdModel, x: SkeletonPoint) -> BarycentricPoint:
    """Inverse of embed: w_j = alpha_j * N_j."""
    check_point(model, x)
    s = model.stratum(x.stratum)
    return BarycentricPoint(
        x.stratum, {v: x.alpha[v] * model.component(v).N for v in s.vertices}
    )


def retract(model: SncdModel, spec: PointSpec) -> SkeletonPoint:
    """Place a point described by component values onto the skeleton.

    The point lands on the face of the center spanned by the vertices
    with positive value, with alpha equal to those values.  A point that
    already lies on the skeleton retracts to itself.
    """
    s = _stratum_and_check(model, spec.center, spec.values)
    if any(a < 0 for a in spec.values.values()):
        raise DomainError("component values must be nonnegative")
    total = sum(spec.values[v] * model.component(v).N for v in s.vertices)
    if total != 1:
        raise DomainError(
            f"values are not normalized: sum(value * N) = {total}, expected 1"
        )
    positive = [v for v in s.vertices if spec.values[v] > 0]
    target = face(model, spec.center, positive)
    return SkeletonPoint(target, {v: spec.values[v] for v in positive})


def weight(model: SncdModel, x: SkeletonPoint) -> Fraction:
    """Weight of a skeleton point with respect to the model's form data.

    >>> from fractions import Fraction as F
    >>> from .complexes import graph_model
    >>> mdl = graph_model("sncd-over-dvr", 1, 2,
    ...                   [("A", "A", 2, 1), ("B", "B", 3, 1)],
    ...                   [("e", "A", "B")])
    >>> weight(mdl, SkeletonPoint("e", {"A": F(1, 4), "B": F(1, 6)}))
    Fraction(5, 12)
    """
    check_point(model, x)
    s = model.stratum(x.stratum)
    if s.horizontal is None:
        return sum(x.alpha[v] * model.component(v).mu for v in s.vertices)
    a = AlphaVector(x.stratum, dict(x.alpha))
    total = sum(x.alpha.values())
    return val(s.horizontal.num, a) - val(s.horizontal.den, a) + model.m * total


def value_on_component(model: SncdModel, x: SkeletonPoint, comp_id: str) -> Fraction:
    """Valuation of a prime component at the point: alpha_c on vertices, else 0."""
    model.component(comp_id)
    s = model.stratum(x.stratum)
    if comp_id in s.vertices:
        return x.alpha[comp_id]
    return Fraction(0)


def classify_face(model: SncdModel, stratum_id: str) -> str:
    """Shape of the weight function on a face, read off the zero/pole flags.

    No flags: the weight is affine.  Zeros only make it concave (a
    minimum of affine functions), poles only make it convex, and with
    both present nothing can be said from the flags alone.
    """
    s = model.stratum(stratum_id)
    if not s.touches_zero and not s.touches_pole:
        return CLASS_AFFINE
    if s.touches_zero and not s.touches_pole:
        return CLASS_CONCAVE
    if s.touches_pole and not s.touches_zero:
        return CLASS_CONVEX
    return CLASS_UNKNOWN
