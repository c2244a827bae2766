"""Weighted dual complexes of strict normal crossings models.

A model is described by its prime components (each carrying a
multiplicity N in the special fiber and an integer weight datum mu) and
by its strata: the connected components of intersections of the prime
components, organized as a simplicial set via explicit face maps.  Two
distinct strata may share the same vertex set (a cycle of two lines
meeting twice is the standard example), which is why the face structure
is data rather than something recomputed from vertex sets.

All numerical data is exact: multiplicities are integers and every
derived quantity downstream is a `fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import DomainError
from .series import SeriesPair

KIND_SNCD = "sncd-over-dvr"
KIND_LOG_RESOLUTION = "log-resolution"
KNOWN_KINDS = (KIND_SNCD, KIND_LOG_RESOLUTION)


@dataclass(frozen=True)
class PrimeComponent:
    """A prime component of the special fiber (or of the pulled-back divisor).

    N is the multiplicity of the component (positive), mu the integer
    weight datum attached to it; mu - m is the multiplicity of the
    component in the divisor of the tracked pluricanonical form.
    """

    id: str
    name: str
    N: int
    mu: int


@dataclass(frozen=True, eq=True)
class Stratum:
    """A connected component of an intersection of prime components.

    vertices lists the component ids whose intersection this stratum
    refines, in a fixed order; exponent vectors and alpha tuples use
    that order.  face_map sends each vertex j to the id of the stratum
    with vertex set vertices minus {j}; it is required whenever the
    stratum has two or more vertices.
    """

    id: str
    vertices: tuple[str, ...]
    face_map: dict[str, str] = field(default_factory=dict)
    touches_zero: bool = False
    touches_pole: bool = False
    horizontal: Optional[SeriesPair] = None

    @property
    def r(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Violation:
    """One validation failure: a stable code plus a readable message."""

    code: str
    message: str

    def __str__(self):
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


@dataclass(frozen=True)
class SncdModel:
    """The combinatorial shadow of an snc model.

    kind is "sncd-over-dvr" for models of a variety over a discretely
    valued field (m-pluricanonical weights) or "log-resolution" for log
    resolutions of a pair (then m = 1 and mu - 1 is the discrepancy).

    Components and strata are stored sorted by id so that equal models
    compare equal and serialization is deterministic regardless of
    construction order.
    """

    kind: str
    m: int
    ambient_dim: int
    components: tuple[PrimeComponent, ...]
    strata: tuple[Stratum, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple(sorted(self.components, key=lambda c: c.id))
        )
        object.__setattr__(
            self, "strata", tuple(sorted(self.strata, key=lambda s: s.id))
        )

    @cached_property
    def _components_by_id(self) -> dict[str, PrimeComponent]:
        return {c.id: c for c in self.components}

    @cached_property
    def _strata_by_id(self) -> dict[str, Stratum]:
        return {s.id: s for s in self.strata}

    def component(self, comp_id: str) -> PrimeComponent:
        try:
            return self._components_by_id[comp_id]
        except KeyError:
            raise DomainError(f"unknown component id {comp_id!r}") from None

    def stratum(self, stratum_id: str) -> Stratum:
        try:
            return self._strata_by_id[stratum_id]
        except KeyError:
            raise DomainError(f"unknown stratum id {stratum_id!r}") from None

    def has_stratum(self, stratum_id: str) -> bool:
        return stratum_id in self._strata_by_id

    def singleton(self, comp_id: str) -> Stratum:
        """The vertex stratum carrying exactly the given component."""
        for s in self.strata:
            if s.vertices == (comp_id,):
                return s
        raise DomainError(f"no singleton stratum for component {comp_id!r}")

    def replace(self, **changes) -> "SncdModel":
        from dataclasses import replace as _replace

        return _replace(self, **changes)


def face(model: SncdModel, stratum_id: str, keep: Iterable[str]) -> str:
    """Return the id of the iterated face of a stratum on a vertex subset.

    Vertices outside `keep` are removed one at a time through the face
    maps; the simplicial identity makes the result independent of the
    removal order.  `keep` must be a nonempty subset of the stratum's
    vertices.
    """
    s = model.stratum(stratum_id)
    keep_set = set(keep)
    if not keep_set:
        raise DomainError("face: empty vertex subset")
    extra = keep_set - set(s.vertices)
    if extra:
        raise DomainError(
            f"face: {sorted(extra)} are not vertices of stratum {stratum_id!r}"
        )
    current = s
    for v in [v for v in s.vertices if v not in keep_set]:
        try:
            nxt = current.face_map[v]
        except KeyError:
            raise DomainError(
                f"face: stratum {current.id!r} has no face map for vertex {v!r}"
            ) from None
        current = model.stratum(nxt)
    return current.id


def is_face(model: SncdModel, face_id: str, coface_id: str) -> bool:
    """True iff the first stratum is an iterated face of the second.

    Every stratum counts as a face of itself.
    """
    f = model.stratum(face_id)
    c = model.stratum(coface_id)
    if not set(f.vertices) <= set(c.vertices):
        return False
    return face(model, coface_id, f.vertices) == face_id


def cofaces(model: SncdModel, stratum_id: str) -> list[str]:
    """All strata having the given stratum as an iterated face, itself included."""
    return [t.id for t in model.strata if is_face(model, stratum_id, t.id)]


def is_maximal(model: SncdModel, stratum_id: str) -> bool:
    return cofaces(model, stratum_id) == [stratum_id]


def connected_components(
    model: SncdModel, stratum_ids: Iterable[str]
) -> list[frozenset[str]]:
    """Partition a set of strata under the symmetric closure of the face relation.

    Two strata in the input are adjacent iff one is an iterated face of
    the other; blocks are returned sorted by their smallest member so
    the output is deterministic.
    """
    ids = list(dict.fromkeys(stratum_ids))
    for sid in ids:
        model.stratum(sid)  # raises DomainError on unknown ids
    parent = {sid: sid for sid in ids}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    id_set = set(ids)
    for sid in ids:
        s = model.stratum(sid)
        # adjacency via every iterated face present in the input
        for k in range(1, len(s.vertices) + 1):
            for keep in _subsets(s.vertices, k):
                fid = face(model, sid, keep)
                if fid in id_set and fid != sid:
                    union(sid, fid)
    blocks: dict[str, set[str]] = {}
    for sid in ids:
        blocks.setdefault(find(sid), set()).add(sid)
    return sorted((frozenset(b) for b in blocks.values()), key=lambda b: min(b))


def _subsets(items: Sequence[str], size: int):
    from itertools import combinations

    return combinations(items, size)


def validate(model: SncdModel) -> ValidationReport:
    """Check every structural invariant of a model, reporting all failures.

    This never raises on malformed content; it accumulates violations so
    a user can fix a hand-written model file in one pass.
    """
    out: list[Violation] = []

    if model.kind not in KNOWN_KINDS:
        out.append(Violation("kind", f"unknown kind {model.kind!r}"))
    if model.m < 1:
        out.append(Violation("form-degree", f"m must be >= 1, got {model.m}"))
    if model.kind == KIND_LOG_RESOLUTION and model.m != 1:
        out.append(
            Violation("kind", f"log-resolution models fix m = 1, got m = {model.m}")
        )
    if model.ambient_dim < 1:
        out.append(
            Violation("ambient-dim", f"ambient_dim must be >= 1, got {model.ambient_dim}")
        )

    comp_ids = [c.id for c in model.components]
    for cid in _duplicates(comp_ids):
        out.append(Violation("duplicate-id", f"component id {cid!r} repeated"))
    for c in model.components:
        if c.N < 1:
            out.append(
                Violation(
                    "component-multiplicity", f"component {c.id!r} has N = {c.N} < 1"
                )
            )

    strat_ids = [s.id for s in model.strata]
    for sid in _duplicates(strat_ids):
        out.append(Violation("duplicate-id", f"stratum id {sid!r} repeated"))
    strata = {s.id: s for s in model.strata}
    comp_set = set(comp_ids)

    singleton_of = {s.vertices[0] for s in model.strata if len(s.vertices) == 1}
    for cid in comp_ids:
        if cid not in singleton_of:
            out.append(
                Violation("missing-singleton", f"component {cid!r} has no vertex stratum")
            )

    for s in model.strata:
        if len(s.vertices) == 0:
            out.append(Violation("stratum-size", f"stratum {s.id!r} has no vertices"))
            continue
        if len(set(s.vertices)) != len(s.vertices):
            out.append(
                Violation("stratum-size", f"stratum {s.id!r} repeats a vertex")
            )
        if len(s.vertices) > model.ambient_dim:
            out.append(
                Violation(
                    "stratum-size",
                    f"stratum {s.id!r} has {len(s.vertices)} vertices, "
                    f"more than ambient_dim = {model.ambient_dim}",
                )
            )
        unknown = [v for v in s.vertices if v not in comp_set]
        for v in unknown:
            out.append(
                Violation(
                    "unknown-component", f"stratum {s.id!r} uses unknown component {v!r}"
                )
            )
        if unknown:
            continue
        if len(s.vertices) >= 2:
            for v in s.vertices:
                if v not in s.face_map:
                    out.append(
                        Violation(
                            "face-map-missing",
                            f"stratum {s.id!r} lacks a face map entry for vertex {v!r}",
                        )
                    )
                    continue
                tid = s.face_map[v]
                t = strata.get(tid)
                if t is None:
                    out.append(
                        Violation(
                            "face-map mismatch",
                            f"stratum {s.id!r}: face at {v!r} points to unknown "
                            f"stratum {tid!r}",
                        )
                    )
                elif tuple(x for x in s.vertices if x != v) != t.vertices:
                    out.append(
                        Violation(
                            "face-map mismatch",
                            f"stratum {s.id!r}: face at {v!r} should carry vertices "
                            f"{tuple(x for x in s.vertices if x != v)}, but "
                            f"{tid!r} carries {t.vertices}",
                        )
                    )
        extra_keys = set(s.face_map) - set(s.vertices)
        for v in sorted(extra_keys):
            out.append(
                Violation(
                    "face-map mismatch",
                    f"stratum {s.id!r} maps non-vertex {v!r}",
                )
            )

    # simplicial identity: removing two vertices commutes
    for s in model.strata:
        if len(s.vertices) < 2 or set(s.vertices) - comp_set:
            continue
        for i, v in enumerate(s.vertices):
            for w in s.vertices[i + 1 :]:
                try:
                    a = _two_step(model, strata, s, v, w)
                    b = _two_step(model, strata, s, w, v)
                except KeyError:
                    continue  # already reported above
                if a is not None and b is not None and a != b:
                    out.append(
                        Violation(
                            "simplicial-identity",
                            f"stratum {s.id!r}: removing {v!r} then {w!r} gives "
                            f"{a!r}, the other order gives {b!r}",
                        )
                    )

    # flag monotonicity: a flag that is off on a stratum is off on its faces
    for s in model.strata:
        if len(s.vertices) < 2 or set(s.vertices) - comp_set:
            continue
        for v, tid in s.face_map.items():
            t = strata.get(tid)
            if t is None:
                continue
            if not s.touches_zero and t.touches_zero:
                out.append(
                    Violation(
                        "flag monotonicity",
                        f"stratum {s.id!r} has touches_zero off but its face "
                        f"{tid!r} has it on",
                    )
                )
            if not s.touches_pole and t.touches_pole:
                out.append(
                    Violation(
                        "flag monotonicity",
                        f"stratum {s.id!r} has touches_pole off but its face "
                        f"{tid!r} has it on",
                    )
                )

    # horizontal data consistency with the declared weights
    for s in model.strata:
        if s.horizontal is None or set(s.vertices) - comp_set:
            continue
        h = s.horizontal
        if h.num.vertices != s.vertices or h.den.vertices != s.vertices:
            out.append(
                Violation(
                    "horizontal-consistency",
                    f"stratum {s.id!r}: expansion coordinates do not match "
                    f"the stratum's vertex order",
                )
            )
            continue
        for j, v in enumerate(s.vertices):
            lo_num = min(beta[j] for beta in h.num.exponents)
            lo_den = min(beta[j] for beta in h.den.exponents)
            expected = model.component(v).mu - model.m
            if lo_num - lo_den != expected:
                out.append(
                    Violation(
                        "horizontal-consistency",
                        f"stratum {s.id!r}, vertex {v!r}: expansion orders give "
                        f"{lo_num} - {lo_den}, declared weight datum needs "
                        f"{expected}",
                    )
                )

    return ValidationReport(tuple(out))


def _two_step(model, strata, s, v, w):
    t = strata.get(s.face_map.get(v, ""))
    if t is None:
        return None
    if len(t.vertices) == 1:
        return None
    return t.face_map.get(w)


def _duplicates(ids):
    seen, dups = set(), []
    for x in ids:
        if x in seen and x not in dups:
            dups.append(x)
        seen.add(x)
    return dups
