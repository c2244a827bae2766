"""Combinatorial blow-ups of snc models and point transfer.

Blowing up the closure of a stratum with vertex set J inserts a new
component e with N_e = sum(N_j) and weight datum mu_e = sum(mu_j), and
replaces the star of the stratum by its stellar subdivision.  Blowing
up a transverse generic center of codimension c through the components
J adds N_e = sum(N_j), mu_e = sum(mu_j) + m*(c - |J|) and glues a new
cone of strata onto the existing complex without removing anything.

Both transforms record a trace: the centers, the new vertices, how the
removed strata were replaced, and the multiplicity decomposition of
every original component in the final model.  The trace is what lets a
point of the old skeleton be re-expressed in the new one with its
weight and its component valuations intact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DomainError, UnsupportedCenterError
from .model import PrimeComponent, SncdModel, Stratum, cofaces, face, is_maximal
from .series import SeriesPair, Support
from .skeleton import SkeletonPoint, check_point, value_on_component


@dataclass(frozen=True)
class BlowupStep:
    """One blow-up: its center, the new vertex, and the stratum replacements.

    codim equals len(center_vertices) for a stratum center; a larger
    codim means a transverse generic point center, which removes no
    strata (replacements is then empty).
    """

    center_stratum: str
    center_vertices: tuple[str, ...]
    codim: int
    new_vertex: str
    replacements: dict[str, dict[tuple[str, ...], str]] = field(default_factory=dict)

    def to_json(self):
        return {
            "center_stratum": self.center_stratum,
            "center_vertices": list(self.center_vertices),
            "codim": self.codim,
            "new_vertex": self.new_vertex,
            "replacements": {
                t: {",".join(a): sid for a, sid in sorted(sub.items())}
                for t, sub in sorted(self.replacements.items())
            },
        }


@dataclass
class BlowupTrace:
    """Steps of a chain of blow-ups plus the pullback decomposition.

    pullback maps each component of the starting model to its
    multiplicity decomposition over the components of the final model.
    """

    steps: list[BlowupStep] = field(default_factory=list)
    pullback: dict[str, dict[str, int]] = field(default_factory=dict)

    def extend(self, step: BlowupStep):
        self.steps.append(step)
        e = step.new_vertex
        center = set(step.center_vertices)
        for decomposition in self.pullback.values():
            coeff = sum(mult for cid, mult in decomposition.items() if cid in center)
            if coeff:
                decomposition[e] = coeff

    def to_json(self):
        return {
            "steps": [s.to_json() for s in self.steps],
            "pullback": {
                c: dict(sorted(d.items())) for c, d in sorted(self.pullback.items())
            },
        }


def _new_trace(model: SncdModel) -> BlowupTrace:
    return BlowupTrace(pullback={c.id: {c.id: 1} for c in model.components})


def _fresh_component_id(model: SncdModel) -> str:
    taken = {c.id for c in model.components}
    k = 1
    while f"exc{k}" in taken:
        k += 1
    return f"exc{k}"


def _fresh_stratum_id(base: str, taken: set[str]) -> str:
    if base not in taken:
        taken.add(base)
        return base
    k = 2
    while f"{base}~{k}" in taken:
        k += 1
    taken.add(f"{base}~{k}")
    return f"{base}~{k}"


def _proper_subsets(vertices: tuple[str, ...]):
    """Proper subsets of a vertex tuple, in the tuple's order, smallest first."""
    from itertools import combinations

    for k in range(len(vertices)):
        yield from combinations(vertices, k)


def _transform_support(
    s: Support, center: tuple[str, ...], new_vertices: tuple[str, ...],
    e_id: str, new_stratum: str, jacobian: int,
) -> Support:
    """Pull an exponent support back through a stratum blow-up.

    The exceptional coordinate collects the total center order of each
    monomial plus the Jacobian shift; coordinates of dropped center
    vertices disappear (their coordinates become units at the new
    stratum); everything else is carried over.
    """
    idx = {v: i for i, v in enumerate(s.vertices)}
    center_pos = [idx[j] for j in center]
    out = set()
    for beta in s.exponents:
        e_coord = sum(beta[p] for p in center_pos) + jacobian
        vec = tuple(
            e_coord if v == e_id else beta[idx[v]] for v in new_vertices
        )
        out.add(vec)
    from .series import reduce_support

    return reduce_support(Support(new_stratum, new_vertices, frozenset(out)))


def _exceptional_mu(model: SncdModel, sigma: Stratum) -> int:
    """Weight datum of the exceptional component over a stratum closure.

    Without expansion data this is the sum of the vertex data; with it,
    the center order of the expansion replaces the sum of the declared
    orders (the two agree when the expansion is monomial times a unit).
    """
    if sigma.horizontal is None:
        return sum(model.component(v).mu for v in sigma.vertices)
    r = sigma.r
    lo_num = min(sum(beta) for beta in sigma.horizontal.num.exponents)
    lo_den = min(sum(beta) for beta in sigma.horizontal.den.exponents)
    return model.m * r + lo_num - lo_den


def _subdivide(model: SncdModel, sigma_id: str) -> tuple[SncdModel, str, BlowupStep]:
    """Star subdivision at an arbitrary stratum with at least two vertices.

    Every coface of the center (the center included) is replaced by the
    cone with apex the new vertex over its proper-center-subset faces;
    everything else is untouched, so the update is local to the star.
    """
    sigma = model.stratum(sigma_id)
    if sigma.r < 2:
        raise UnsupportedCenterError(
            f"stratum {sigma_id!r} is a single component; blowing up a divisor "
            f"is an isomorphism and changes no complex"
        )
    J = sigma.vertices
    e_id = _fresh_component_id(model)
    N_e = sum(model.component(v).N for v in J)
    mu_e = _exceptional_mu(model, sigma)

    coface_ids = sorted(cofaces(model, sigma_id))
    removed = set(coface_ids)
    kept = [s for s in model.strata if s.id not in removed]
    taken = {s.id for s in kept}

    # name every replacement first so face maps can point forward
    names: dict[tuple[str, tuple[str, ...]], str] = {}
    replacements: dict[str, dict[tuple[str, ...], str]] = {}
    plan: list[tuple[Stratum, tuple[str, ...], tuple[str, ...], tuple[str, ...]]] = []
    for tid in coface_ids:
        tau = model.stratum(tid)
        L = tuple(v for v in tau.vertices if v not in J)
        replacements[tid] = {}
        for A in _proper_subsets(J):
            # keep tau's vertex order so face tuples agree with old strata
            kept_verts = set(A) | set(L)
            verts = (e_id,) + tuple(v for v in tau.vertices if v in kept_verts)
            base = f"v_{e_id}" if len(verts) == 1 else "f_" + "_".join(verts)
            new_id = _fresh_stratum_id(base, taken)
            names[(tid, A)] = new_id
            replacements[tid][A] = new_id
            plan.append((tau, A, L, verts))

    new_strata = []
    for tau, A, L, verts in plan:
        new_id = names[(tau.id, A)]
        fm: dict[str, str] = {}
        if len(verts) >= 2:
            if A + L:
                fm[e_id] = face(model, tau.id, A + L)
            for a in A:
                fm[a] = names[(tau.id, tuple(x for x in A if x != a))]
            for l in L:
                fm[l] = names[(tau.face_map[l], A)]
        horizontal: Optional[SeriesPair] = None
        if tau.horizontal is not None:
            horizontal = SeriesPair(
                _transform_support(
                    tau.horizontal.num, J, verts, e_id, new_id,
                    model.m * (sigma.r - 1),
                ),
                _transform_support(tau.horizontal.den, J, verts, e_id, new_id, 0),
            )
        new_strata.append(
            Stratum(new_id, verts, fm, tau.touches_zero, tau.touches_pole, horizontal)
        )

    out = SncdModel(
        model.kind,
        model.m,
        model.ambient_dim,
        model.components + (PrimeComponent(e_id, e_id, N_e, mu_e),),
        tuple(kept) + tuple(new_strata),
    )
    step = BlowupStep(sigma_id, J, len(J), e_id, replacements)
    return out, e_id, step


def blowup_stratum(
    model: SncdModel, stratum_id: str
) -> tuple[SncdModel, str, BlowupTrace]:
    """Blow up the closure of a maximal stratum.

    Returns the transformed model, the new vertex's component id, and a
    single-step trace.  Non-maximal centers are rejected: subdividing
    through deeper strata is reserved for the reduction loop, which
    performs the full star subdivision internally.
    """
    if not is_maximal(model, stratum_id):
        raise UnsupportedCenterError(
            f"stratum {stratum_id!r} is not maximal; only maximal strata are "
            f"accepted as stratum centers"
        )
    out, e_id, step = _subdivide(model, stratum_id)
    trace = _new_trace(model)
    trace.extend(step)
    return out, e_id, trace


def blowup_point(
    model: SncdModel, stratum_id: str, center: tuple[str, ...], codim: int
) -> tuple[SncdModel, str, BlowupTrace]:
    """Blow up a transverse generic center through the components `center`.

    The center is a generic codimension-`codim` subvariety met along
    exactly the listed components, which must span a face of the given
    maximal stratum.  With codim equal to the number of components the
    center fills the whole face closure and the operation degenerates
    to blowup_stratum.
    """
    s = model.stratum(stratum_id)
    if not is_maximal(model, stratum_id):
        raise UnsupportedCenterError(
            f"stratum {stratum_id!r} is not maximal"
        )
    J = tuple(v for v in s.vertices if v in set(center))
    if len(J) != len(set(center)) or not center:
        raise DomainError(
            f"center components {list(center)} are not a nonempty subset of "
            f"the vertices of stratum {stratum_id!r}"
        )
    if codim < len(J) or codim > model.ambient_dim:
        raise DomainError(
            f"codimension {codim} outside [{len(J)}, {model.ambient_dim}]"
        )
    if codim == len(J):
        if J != s.vertices:
            raise UnsupportedCenterError(
                f"a codimension-{codim} center through {list(J)} fills the "
                f"closure of a non-maximal stratum; blow up that stratum's "
                f"cofaces instead"
            )
        return blowup_stratum(model, stratum_id)

    e_id = _fresh_component_id(model)
    N_e = sum(model.component(v).N for v in J)
    mu_e = sum(model.component(v).mu for v in J) + model.m * (codim - len(J))

    taken = {t.id for t in model.strata}
    names: dict[tuple[str, ...], str] = {}
    subsets = [
        A for A in _all_subsets(J) if len(A) <= codim - 1
    ]
    for A in subsets:
        verts = (e_id,) + A
        base = f"v_{e_id}" if len(verts) == 1 else "f_" + "_".join(verts)
        names[A] = _fresh_stratum_id(base, taken)

    new_strata = []
    for A in subsets:
        verts = (e_id,) + A
        fm: dict[str, str] = {}
        if len(verts) >= 2:
            fm[e_id] = face(model, stratum_id, A)
            for a in A:
                fm[a] = names[tuple(x for x in A if x != a)]
        new_strata.append(
            Stratum(names[A], verts, fm, s.touches_zero, s.touches_pole, None)
        )

    out = SncdModel(
        model.kind,
        model.m,
        model.ambient_dim,
        model.components + (PrimeComponent(e_id, e_id, N_e, mu_e),),
        model.strata + tuple(new_strata),
    )
    trace = _new_trace(model)
    trace.extend(BlowupStep(stratum_id, J, codim, e_id, {}))
    return out, e_id, trace


def _all_subsets(vertices: tuple[str, ...]):
    from itertools import combinations

    for k in range(len(vertices) + 1):
        yield from combinations(vertices, k)


def _apply_step(
    step: BlowupStep, stratum_id: str, alpha: dict[str, Fraction]
) -> tuple[str, dict[str, Fraction]]:
    """Push one point through one blow-up step; no-op off the subdivided star."""
    sub = step.replacements.get(stratum_id)
    if sub is None:
        return stratum_id, alpha
    e = step.new_vertex
    center = set(step.center_vertices)
    a_min = min(alpha[j] for j in step.center_vertices)
    A = tuple(j for j in step.center_vertices if alpha[j] > a_min)
    new_alpha = {e: a_min}
    for v, a in alpha.items():
        if v in center:
            if a > a_min:
                new_alpha[v] = a - a_min
        else:
            new_alpha[v] = a
    return sub[A], new_alpha


def transfer_point(
    source: SncdModel, target: SncdModel, trace: BlowupTrace, x: SkeletonPoint
) -> SkeletonPoint:
    """Rewrite a skeleton point of the source model in the blown-up model.

    A point moves only when its stratum was subdivided; the exceptional
    coordinate receives the minimum of the center coordinates (the
    valuation of the center's ideal) and the center coordinates shrink
    by that amount, vanishing ones dropping out.  Weight and pullback
    component values are invariants of the rewrite.
    """
    check_point(source, x)
    stratum_id = x.stratum
    alpha = dict(x.alpha)
    for step in trace.steps:
        stratum_id, alpha = _apply_step(step, stratum_id, alpha)
    result = SkeletonPoint(stratum_id, alpha)
    if not target.has_stratum(stratum_id):
        raise DomainError(
            f"trace does not lead into the given target model: stratum "
            f"{stratum_id!r} is missing"
        )
    check_point(target, result)
    return result


def pullback_value(
    target: SncdModel, trace: BlowupTrace, x: SkeletonPoint, original_comp: str
) -> Fraction:
    """Valuation of an original component at a transferred point.

    Computed through the trace's multiplicity decomposition; for points
    transferred from the source model this equals the source value.
    """
    try:
        decomposition = trace.pullback[original_comp]
    except KeyError:
        raise DomainError(
            f"component {original_comp!r} is not tracked by this trace"
        ) from None
    return sum(
        mult * value_on_component(target, x, cid)
        for cid, mult in decomposition.items()
    )


def reduce_to_divisorial(
    model: SncdModel, x: SkeletonPoint
) -> tuple[SncdModel, str, BlowupTrace]:
    """Blow up along the point's stratum until the point becomes divisorial.

    Each pass subdivides the current stratum of the point; the minimum
    coordinate moves to the new vertex and at least one old coordinate
    drops out, so for rational input the loop ends after finitely many
    steps with the point sitting at a single vertex.  Returns the final
    model, that vertex's component id, and the full trace.
    """
    check_point(model, x)
    trace = _new_trace(model)
    stratum_id, alpha = x.stratum, dict(x.alpha)
    while model.stratum(stratum_id).r > 1:
        model, _, step = _subdivide(model, stratum_id)
        trace.extend(step)
        stratum_id, alpha = _apply_step(step, stratum_id, alpha)
    comp_id = model.stratum(stratum_id).vertices[0]
    return model, comp_id, trace
