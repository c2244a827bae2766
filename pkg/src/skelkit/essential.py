"""Minimal-weight loci: the skeleton selected by a pluricanonical form.

The weight function of a regular form attains its minimum over the
whole dual complex at min over components of mu_i / N_i, and the locus
where it does so is the union of the closed faces all of whose vertices
realize that minimum and which stay away from the form's zero locus.
Taking the union over several forms gives the part of the complex that
no modification can shrink.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError
from .model import SncdModel, Stratum, connected_components, validate


@dataclass(frozen=True)
class FormData:
    """Weight data of one form overlaid on a model.

    mu must cover every component; flag maps may be partial (missing
    strata default to off) but must satisfy the same monotonicity as
    stratum flags: a face of a stratum with a flag off has it off too.
    """

    m: int
    mu: dict[str, int]
    touches_zero: dict[str, bool] = field(default_factory=dict)
    touches_pole: dict[str, bool] = field(default_factory=dict)


@dataclass(frozen=True)
class Subcomplex:
    """A face-closed set of strata of a fixed model."""

    strata: frozenset[str]

    @property
    def empty(self) -> bool:
        return not self.strata

    def __contains__(self, stratum_id: str) -> bool:
        return stratum_id in self.strata


def subcomplex(model: SncdModel, stratum_ids) -> Subcomplex:
    """Build a subcomplex, checking face-closure against the model."""
    ids = frozenset(stratum_ids)
    for sid in ids:
        s = model.stratum(sid)
        for v in s.vertices:
            if len(s.vertices) == 1:
                continue
            fid = s.face_map.get(v)
            if fid not in ids:
                raise DomainError(
                    f"stratum set is not face-closed: {sid!r} is included but "
                    f"its face {fid!r} is not"
                )
    return Subcomplex(ids)


def apply_form(model: SncdModel, form: FormData) -> SncdModel:
    """Overlay a form's weight data on a model.

    Produces a model with the form's m, mu and flags; stratum expansion
    data is dropped since it described the original form.
    """
    if form.m < 1:
        raise DomainError(f"form degree must be >= 1, got {form.m}")
    missing = [c.id for c in model.components if c.id not in form.mu]
    if missing:
        raise DomainError(f"form gives no weight datum for components {missing}")
    comps = tuple(replace(c, mu=form.mu[c.id]) for c in model.components)
    strata = tuple(
        Stratum(
            s.id,
            s.vertices,
            dict(s.face_map),
            form.touches_zero.get(s.id, False),
            form.touches_pole.get(s.id, False),
            None,
        )
        for s in model.strata
    )
    out = SncdModel(model.kind, form.m, model.ambient_dim, comps, strata)
    report = validate(out)
    if not report.ok:
        raise DomainError(f"form data breaks the model: {report}")
    return out


def _resolved(model: SncdModel, form: Optional[FormData]) -> SncdModel:
    return model if form is None else apply_form(model, form)


def min_weight(model: SncdModel, form: Optional[FormData] = None) -> Fraction:
    """Minimum of the weight function over the whole skeleton.

    Requires a form without poles; the minimum is then attained at a
    vertex and equals min over components of mu_i / N_i.
    """
    mdl = _resolved(model, form)
    flagged = [s.id for s in mdl.strata if s.touches_pole]
    if flagged:
        raise DomainError(
            f"form has poles along strata {sorted(flagged)}; weights are "
            f"unbounded below and no minimum exists"
        )
    if not mdl.components:
        raise DomainError("model has no components")
    return min(Fraction(c.mu, c.N) for c in mdl.components)


def ks_skeleton(model: SncdModel, form: Optional[FormData] = None) -> Subcomplex:
    """Faces on which the weight function is identically minimal.

    A stratum qualifies when every vertex realizes the minimal ratio
    and the stratum stays off the form's zero locus; flag monotonicity
    makes the result face-closed.  The result can be empty only for
    flag data no actual form produces.
    """
    mdl = _resolved(model, form)
    lo = min_weight(mdl)
    chosen = []
    for s in mdl.strata:
        if s.touches_zero:
            continue
        ratios = [Fraction(mdl.component(v).mu, mdl.component(v).N) for v in s.vertices]
        if all(rho == lo for rho in ratios):
            chosen.append(s.id)
    return subcomplex(model, chosen)


def essential_skeleton(model: SncdModel, forms: Sequence[FormData]) -> Subcomplex:
    """Union of the minimal-weight skeleta of several forms."""
    forms = list(forms)
    if not forms:
        raise DomainError("essential skeleton needs at least one form")
    strata: frozenset[str] = frozenset()
    for f in forms:
        strata |= ks_skeleton(model, f).strata
    return subcomplex(model, strata)


def is_connected(model: SncdModel, sub: Subcomplex) -> bool:
    """Whether the geometric realization of a face-closed stratum set is connected.

    The empty subcomplex is reported as not connected; callers that
    need to tell the two apart test `sub.empty`.
    """
    if sub.empty:
        return False
    return len(connected_components(model, sorted(sub.strata))) == 1
