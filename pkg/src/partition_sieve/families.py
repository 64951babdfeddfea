"""Indexed families of multisets and the built-in catalog of statistic pairs.

An infinite list F_1, F_2, ... of multisets is presented finitely as a
collection of *strands*: either a polynomial template evaluated at
t = tmin, tmin+1, ... (sizes quadratic in t, multiplicities linear in t),
or a single explicit multiset. Quadratic sizes and linear multiplicities
cover every built-in pair (the squares pair needs t^2 sizes and
multiplicity t).

A FamilyPair holds two families with aligned strands; the alignment
realizes the per-index pairing F_i <-> G_i that the disjoint-family
hypothesis checker relies on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, NamedTuple, Sequence

from .partitions import Multiset

__all__ = [
    "BUILTIN_PAIRS",
    "FamilyError",
    "FamilyIndex",
    "FamilyPair",
    "MultisetFamily",
    "Strand",
    "StrandEntry",
    "builtin_pair",
    "parse_family_pair",
    "render_family_pair",
]

# Numeric validation range for strand invariants (sizes/multiplicities >= 1,
# weight nondecreasing). Evaluation re-checks pointwise beyond the horizon.
DEFAULT_VALIDATION_HORIZON = 64


class FamilyError(ValueError):
    """Schema or invariant violation in a family, strand, or pair document."""


def _poly_eval(coeffs: Sequence[int], t: int) -> int:
    value = 0
    for c in coeffs:
        value = value * t + c
    return value


@dataclass(frozen=True)
class StrandEntry:
    """One template entry: size(t) = c2*t^2 + c1*t + c0, mult(t) = m1*t + m0."""

    size: tuple[int, int, int]
    mult: tuple[int, int]

    def __post_init__(self):
        for name, coeffs, arity in (("size", self.size, 3), ("mult", self.mult, 2)):
            if len(coeffs) != arity or not all(isinstance(c, int) for c in coeffs):
                raise FamilyError(
                    f"{name} must be {arity} integer coefficients, got {coeffs!r}"
                )

    def size_at(self, t: int) -> int:
        return _poly_eval(self.size, t)

    def mult_at(self, t: int) -> int:
        return _poly_eval(self.mult, t)

    def weight_poly(self) -> tuple[int, int, int, int]:
        """Coefficients (degree 3..0) of size(t) * mult(t)."""
        c2, c1, c0 = self.size
        m1, m0 = self.mult
        return (c2 * m1, c2 * m0 + c1 * m1, c1 * m0 + c0 * m1, c0 * m0)


@dataclass(frozen=True)
class Strand:
    """A strand of family members: a polynomial template over t >= tmin,
    or a single explicit multiset (whose only index is t = tmin)."""

    entries: tuple[StrandEntry, ...] = ()
    explicit: Multiset | None = None
    tmin: int = 1

    def __post_init__(self):
        if (self.explicit is None) == (not self.entries):
            raise FamilyError("strand needs either template entries or an explicit multiset")
        if self.explicit is not None:
            if not self.explicit:
                raise FamilyError("explicit strand multiset must be nonempty")
            return
        # Weight must grow without bound along the strand, otherwise the
        # finite-truncation contract (relevant indices <= n) breaks down.
        wpoly = [0, 0, 0, 0]
        for entry in self.entries:
            for i, c in enumerate(entry.weight_poly()):
                wpoly[i] += c
        degree = next((3 - i for i, c in enumerate(wpoly) if c != 0), -1)
        if degree < 1 or wpoly[3 - degree] < 0:
            raise FamilyError(
                "strand weight must tend to infinity (needs a positive leading "
                f"size or multiplicity coefficient), weight poly {wpoly}"
            )
        self.validate_range(DEFAULT_VALIDATION_HORIZON)

    def is_explicit(self) -> bool:
        return self.explicit is not None

    def validate_range(self, horizon: int) -> None:
        """Check sizes/multiplicities >= 1 and nondecreasing weight for
        t in [tmin, tmin + horizon]."""
        if self.explicit is not None:
            return
        prev_weight = None
        for t in range(self.tmin, self.tmin + horizon + 1):
            weight = self.weight_at(t)
            if prev_weight is not None and weight < prev_weight:
                raise FamilyError(
                    f"strand weight decreases from t={t - 1} ({prev_weight}) "
                    f"to t={t} ({weight})"
                )
            prev_weight = weight

    def weight_at(self, t: int) -> int:
        if self.explicit is not None:
            return self.explicit.weight
        total = 0
        for k, entry in enumerate(self.entries):
            size = entry.size_at(t)
            mult = entry.mult_at(t)
            if size < 1:
                raise FamilyError(f"entry {k}: size {size} < 1 at t={t}")
            if mult < 1:
                raise FamilyError(f"entry {k}: multiplicity {mult} < 1 at t={t}")
            total += size * mult
        return total

    def multiset_at(self, t: int) -> Multiset:
        if t < self.tmin:
            raise FamilyError(f"t={t} below strand domain t >= {self.tmin}")
        if self.explicit is not None:
            if t != self.tmin:
                raise FamilyError(f"explicit strand has the single index t={self.tmin}")
            return self.explicit
        pairs = []
        for k, entry in enumerate(self.entries):
            size = entry.size_at(t)
            mult = entry.mult_at(t)
            if size < 1:
                raise FamilyError(f"entry {k}: size {size} < 1 at t={t}")
            if mult < 1:
                raise FamilyError(f"entry {k}: multiplicity {mult} < 1 at t={t}")
            pairs.append((size, mult))
        return Multiset(pairs)


class FamilyIndex(NamedTuple):
    """Position of one member: which strand, and the strand parameter t."""

    strand: int
    t: int


@dataclass(frozen=True)
class MultisetFamily:
    """An indexed family of nonempty multisets of positive integers."""

    name: str
    strands: tuple[Strand, ...]

    def __post_init__(self):
        if not self.strands:
            raise FamilyError(f"family {self.name!r} has no strands")

    def member(self, idx: FamilyIndex) -> Multiset:
        if not 0 <= idx.strand < len(self.strands):
            raise FamilyError(f"no strand {idx.strand} in family {self.name!r}")
        return self.strands[idx.strand].multiset_at(idx.t)

    def relevant_indices(self, n: int) -> list[FamilyIndex]:
        """All indices whose member weight is <= n, sorted by (weight, strand, t).

        Only these members can occur inside a partition of n. Each strand is
        scanned until its (nondecreasing) weight exceeds n; the scan asserts
        monotonicity as it goes.
        """
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        found: list[tuple[int, int, int]] = []
        for si, strand in enumerate(self.strands):
            if strand.is_explicit():
                weight = strand.weight_at(strand.tmin)
                if weight <= n:
                    found.append((weight, si, strand.tmin))
                continue
            t = strand.tmin
            prev_weight = None
            while True:
                weight = strand.weight_at(t)
                if prev_weight is not None and weight < prev_weight:
                    raise FamilyError(
                        f"family {self.name!r} strand {si}: weight decreases at t={t}"
                    )
                if weight > n:
                    break
                found.append((weight, si, t))
                prev_weight = weight
                t += 1
        found.sort()
        return [FamilyIndex(si, t) for _, si, t in found]


@dataclass(frozen=True)
class FamilyPair:
    """Two families with aligned strands (same count, same domains).

    The alignment pairs member F_(s,t) with G_(s,t); it is what the
    per-index weight-equality hypothesis is checked against. Union-weight
    checking uses the same shared index positions.
    """

    name: str
    F: MultisetFamily
    G: MultisetFamily

    def __post_init__(self):
        fs, gs = self.F.strands, self.G.strands
        if len(fs) != len(gs):
            raise FamilyError(
                f"pair {self.name!r}: F has {len(fs)} strands but G has {len(gs)}"
            )
        for si, (a, b) in enumerate(zip(fs, gs)):
            if a.is_explicit() != b.is_explicit() or a.tmin != b.tmin:
                raise FamilyError(
                    f"pair {self.name!r}: strand {si} domains differ between F and G"
                )


def _template_strand(
    entries: Iterable[tuple[tuple[int, int, int], tuple[int, int]]], tmin: int = 1
) -> Strand:
    return Strand(
        entries=tuple(StrandEntry(size, mult) for size, mult in entries), tmin=tmin
    )


def _single(size_poly: tuple[int, int, int], mult_poly: tuple[int, int], tmin: int = 1) -> Strand:
    return _template_strand([(size_poly, mult_poly)], tmin=tmin)


def _euler_pair() -> FamilyPair:
    return FamilyPair(
        "euler",
        MultisetFamily("euler.F", (_single((0, 2, 0), (0, 1)),)),  # {2t}
        MultisetFamily("euler.G", (_single((0, 1, 0), (0, 2)),)),  # {t,t}
    )


def _squares_pair() -> FamilyPair:
    return FamilyPair(
        "squares",
        MultisetFamily("squares.F", (_single((1, 0, 0), (0, 1)),)),  # {t^2}
        MultisetFamily("squares.G", (_single((0, 1, 0), (1, 0)),)),  # t copies of t
    )


def _mod6_pair() -> FamilyPair:
    # Weight-matched form: F lists the sizes = 2,3,4 (mod 6) as singletons;
    # G pairs them with {r,r} for r = 1 (mod 3), the odd multiples of 3 as
    # singletons, and {r,r} for r = 2 (mod 3). Weights match strandwise:
    # 6t+2 = 2(3t+1), 6t+3 = 6t+3, 6t+4 = 2(3t+2).
    F = MultisetFamily(
        "mod6.F",
        (
            _single((0, 6, 2), (0, 1), tmin=0),
            _single((0, 6, 3), (0, 1), tmin=0),
            _single((0, 6, 4), (0, 1), tmin=0),
        ),
    )
    G = MultisetFamily(
        "mod6.G",
        (
            _single((0, 3, 1), (0, 2), tmin=0),
            _single((0, 6, 3), (0, 1), tmin=0),
            _single((0, 3, 2), (0, 2), tmin=0),
        ),
    )
    return FamilyPair("mod6", F, G)


def _glaisher_pair(d: int) -> FamilyPair:
    if not isinstance(d, int) or d <= 1:
        raise FamilyError(f"glaisher requires an integer d > 1, got {d!r}")
    return FamilyPair(
        f"glaisher(d={d})",
        MultisetFamily(f"glaisher(d={d}).F", (_single((0, d, 0), (0, 1)),)),  # {dt}
        MultisetFamily(f"glaisher(d={d}).G", (_single((0, 1, 0), (0, d)),)),  # d copies of t
    )


def _remmel_consecutive_pair() -> FamilyPair:
    F = MultisetFamily(
        "remmel_consecutive.F",
        (_template_strand([((0, 2, 0), (0, 1)), ((0, 2, 2), (0, 1))]),),  # {2t, 2t+2}
    )
    G = MultisetFamily(
        "remmel_consecutive.G",
        (_template_strand([((0, 1, 0), (0, 2)), ((0, 1, 1), (0, 2))]),),  # {t,t,t+1,t+1}
    )
    return FamilyPair("remmel_consecutive", F, G)


def doubling_complement(m1: Iterable[int]) -> set[int]:
    """M2 = M1 minus the doubles of M1 (members m with m odd or m//2 not in M1)."""
    m1set = set(m1)
    return {m for m in m1set if m % 2 == 1 or m // 2 not in m1set}


def _andrews_pair(m1: Sequence[int], bound: int) -> FamilyPair:
    if not isinstance(bound, int) or bound < 1:
        raise FamilyError(f"andrews requires an integer bound >= 1, got {bound!r}")
    m1set = set()
    for m in m1:
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise FamilyError(f"M1 entries must be integers >= 1, got {m!r}")
        m1set.add(m)
    if not m1set:
        raise FamilyError("M1 must be nonempty")
    for m in sorted(m1set):
        if 2 * m <= bound and 2 * m not in m1set:
            raise FamilyError(
                f"M1 is not closed under doubling within the bound: {m} is in M1 "
                f"but {2 * m} <= {bound} is not"
            )
    m2 = doubling_complement(m1set)
    f_strands: list[Strand] = []
    g_strands: list[Strand] = []
    for s in range(1, bound + 1):
        if s in m2:
            continue
        f_strands.append(Strand(explicit=Multiset({s: 1})))
        if s in m1set:
            # s is a double of an M1 member; the partner swaps it for {s/2, s/2}.
            g_strands.append(Strand(explicit=Multiset({s // 2: 2})))
        else:
            g_strands.append(Strand(explicit=Multiset({s: 1})))
    if not f_strands:
        raise FamilyError(f"no sizes outside M2 up to bound {bound}; family would be empty")
    name = f"andrews(bound={bound})"
    return FamilyPair(
        name,
        MultisetFamily(name + ".F", tuple(f_strands)),
        MultisetFamily(name + ".G", tuple(g_strands)),
    )


# name -> (parameter summary, what the pair verifies)
BUILTIN_PAIRS: dict[str, tuple[str, str]] = {
    "euler": (
        "",
        "X: even part sizes present; Y: repeated part sizes. Identically "
        "distributed; j=0 recovers Euler's distinct-parts = odd-parts theorem.",
    ),
    "squares": (
        "",
        "X: part sizes that are perfect squares; Y: part sizes i with "
        "multiplicity >= i. Disjoint-family criterion (theorem B).",
    ),
    "mod6": (
        "",
        "X: part sizes = 2,3,4 (mod 6); Y: odd multiples of 3 present, plus "
        "repeated sizes not divisible by 3 (weight-matched form; use "
        "--prose-y on compare for the divergent 'any multiple of 3' reading).",
    ),
    "glaisher": (
        "--d D (D > 1)",
        "X: part sizes divisible by D; Y: part sizes with multiplicity >= D. "
        "Glaisher's theorem at j=0; disjoint-family criterion (theorem B).",
    ),
    "andrews": (
        "--m1-file FILE",
        "X: part sizes outside M2 = M1 - 2M1; Y: part sizes i with i not in "
        "M1, or i in M1 and repeated. Andrews' theorem at j=0; M1 must be "
        "doubling-closed within the working bound.",
    ),
    "remmel_consecutive": (
        "",
        "X: adjacent even sizes 2i,2i+2 both present; Y: adjacent sizes i,i+1 "
        "both repeated. Passes the union-weight criterion (theorem C) while "
        "failing theorem B's disjointness.",
    ),
}


def builtin_pair(
    name: str,
    *,
    d: int | None = None,
    m1: Sequence[int] | None = None,
    bound: int | None = None,
) -> FamilyPair:
    """Construct a catalog pair by name.

    glaisher requires d > 1; andrews requires m1 (the explicit M1 list) and
    bound (the largest working n, which caps the generated strands). Other
    pairs take no parameters.
    """
    if name not in BUILTIN_PAIRS:
        raise FamilyError(
            f"unknown pair {name!r}; known: {', '.join(sorted(BUILTIN_PAIRS))}"
        )
    if name != "glaisher" and d is not None:
        raise FamilyError(f"pair {name!r} takes no d parameter")
    if name != "andrews" and (m1 is not None or bound is not None):
        raise FamilyError(f"pair {name!r} takes no m1/bound parameters")
    if name == "euler":
        return _euler_pair()
    if name == "squares":
        return _squares_pair()
    if name == "mod6":
        return _mod6_pair()
    if name == "glaisher":
        if d is None:
            raise FamilyError("glaisher requires d")
        return _glaisher_pair(d)
    if name == "andrews":
        if m1 is None or bound is None:
            raise FamilyError("andrews requires m1 and bound")
        return _andrews_pair(m1, bound)
    return _remmel_consecutive_pair()


# --- pair-file documents ---------------------------------------------------
#
# {
#   "name": "euler",
#   "tmin": 1,
#   "F": [ {"entries": [{"size": [0,2,0], "mult": [0,1]}]} ],
#   "G": [ {"entries": [{"size": [0,1,0], "mult": [0,2]}]} ]
# }
#
# size [c2,c1,c0] means c2*t^2 + c1*t + c0; mult [m1,m0] means m1*t + m0.
# A strand may instead be {"explicit": [[size, mult], ...]}.


def _require_int(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise FamilyError(f"{where}: expected an integer, got {value!r}")
    return value


def _parse_strand(raw: Any, tmin: int, where: str) -> Strand:
    if not isinstance(raw, Mapping):
        raise FamilyError(f"{where}: strand must be an object, got {type(raw).__name__}")
    keys = set(raw)
    if keys == {"entries"}:
        entries = raw["entries"]
        if not isinstance(entries, Sequence) or isinstance(entries, (str, bytes)) or not entries:
            raise FamilyError(f"{where}: 'entries' must be a nonempty array")
        parsed = []
        for k, entry in enumerate(entries):
            loc = f"{where} entry {k}"
            if not isinstance(entry, Mapping) or set(entry) != {"size", "mult"}:
                raise FamilyError(f"{loc}: expected keys 'size' and 'mult'")
            size = entry["size"]
            mult = entry["mult"]
            if not isinstance(size, Sequence) or len(size) != 3:
                raise FamilyError(f"{loc}: 'size' must be [c2, c1, c0]")
            if not isinstance(mult, Sequence) or len(mult) != 2:
                raise FamilyError(f"{loc}: 'mult' must be [m1, m0]")
            size_t = tuple(_require_int(c, f"{loc} size") for c in size)
            mult_t = tuple(_require_int(c, f"{loc} mult") for c in mult)
            parsed.append(StrandEntry(size_t, mult_t))
        try:
            return Strand(entries=tuple(parsed), tmin=tmin)
        except FamilyError as exc:
            raise FamilyError(f"{where}: {exc}") from None
    if keys == {"explicit"}:
        pairs = raw["explicit"]
        if not isinstance(pairs, Sequence) or isinstance(pairs, (str, bytes)) or not pairs:
            raise FamilyError(f"{where}: 'explicit' must be a nonempty array of [size, mult]")
        elements = []
        for k, pair in enumerate(pairs):
            if not isinstance(pair, Sequence) or len(pair) != 2:
                raise FamilyError(f"{where} element {k}: expected [size, mult]")
            size = _require_int(pair[0], f"{where} element {k} size")
            mult = _require_int(pair[1], f"{where} element {k} mult")
            if size < 1 or mult < 1:
                raise FamilyError(f"{where} element {k}: size and mult must be >= 1")
            elements.append((size, mult))
        return Strand(explicit=Multiset(elements), tmin=tmin)
    raise FamilyError(f"{where}: strand must have exactly one of 'entries' or 'explicit'")


def parse_family_pair(
    document: str | bytes | Mapping[str, Any],
    *,
    horizon: int = DEFAULT_VALIDATION_HORIZON,
) -> FamilyPair:
    """Build a validated FamilyPair from a JSON document (text or parsed).

    Violations are reported with their strand/entry location. Template
    strands are numerically validated (sizes and multiplicities >= 1,
    nondecreasing weight) for t up to tmin + horizon.
    """
    if isinstance(document, (str, bytes)):
        try:
            data = json.loads(document)
        except json.JSONDecodeError as exc:
            raise FamilyError(f"invalid JSON: {exc}") from None
    else:
        data = document
    if not isinstance(data, Mapping):
        raise FamilyError("pair document must be a JSON object")
    unknown = set(data) - {"name", "tmin", "F", "G"}
    if unknown:
        raise FamilyError(f"unknown top-level keys: {', '.join(sorted(unknown))}")
    for key in ("name", "F", "G"):
        if key not in data:
            raise FamilyError(f"missing required key {key!r}")
    name = data["name"]
    if not isinstance(name, str) or not name:
        raise FamilyError("'name' must be a nonempty string")
    tmin = _require_int(data.get("tmin", 1), "'tmin'")
    sides = {}
    for side in ("F", "G"):
        raw_strands = data[side]
        if not isinstance(raw_strands, Sequence) or isinstance(raw_strands, (str, bytes)):
            raise FamilyError(f"'{side}' must be an array of strands")
        if not raw_strands:
            raise FamilyError(f"'{side}' must contain at least one strand")
        strands = tuple(
            _parse_strand(raw, tmin, f"{side} strand {i}")
            for i, raw in enumerate(raw_strands)
        )
        for i, strand in enumerate(strands):
            try:
                strand.validate_range(horizon)
            except FamilyError as exc:
                raise FamilyError(f"{side} strand {i}: {exc}") from None
        sides[side] = MultisetFamily(f"{name}.{side}", strands)
    return FamilyPair(name, sides["F"], sides["G"])


def render_family_pair(pair: FamilyPair) -> dict[str, Any]:
    """The canonical pair document for a FamilyPair; inverse of parse."""
    tmins = {s.tmin for s in pair.F.strands} | {s.tmin for s in pair.G.strands}
    if len(tmins) != 1:
        raise FamilyError("only pairs with one uniform tmin can be rendered")
    doc: dict[str, Any] = {"name": pair.name, "tmin": tmins.pop()}
    for side, family in (("F", pair.F), ("G", pair.G)):
        rendered = []
        for strand in family.strands:
            if strand.explicit is not None:
                rendered.append({"explicit": [[s, m] for s, m in strand.explicit.items()]})
            else:
                rendered.append(
                    {
                        "entries": [
                            {"size": list(e.size), "mult": list(e.mult)}
                            for e in strand.entries
                        ]
                    }
                )
        doc[side] = rendered
    return doc
