"""Basic Hodge diamonds of Sasakian characteristic foliations.

Two kinds of functions live here. Constructors (``diamond_from_flag``,
``sphere_diamond``) always emit data satisfying the known theorems.
Validators (``validate_diamond`` and the ``check_*`` functions) audit
claimed data, e.g. hand-entered JSON, and return a :class:`ValidationReport`
instead of raising.

A diamond is stored as the full ``(n + 1) x (n + 1)`` matrix ``h[p][q]``;
none of its symmetries are assumed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from flaghodge.errors import OracleMismatch, PreconditionViolated
from flaghodge.flagcoh import FlagCohomology
from flaghodge.polyring import eval_at_one

__all__ = [
    "HodgeDiamond",
    "RuleResult",
    "SasakiStructureRecord",
    "ValidationReport",
    "betti_from_diamond",
    "builtin_fixtures",
    "carrell_lieberman_check",
    "check_finite_closed_leaves_vanishing",
    "check_positivity_vanishing",
    "closed_leaf_count_from_flag",
    "diamond_from_flag",
    "points_diamond",
    "record_from_json",
    "record_to_json",
    "sphere_diamond",
    "validate_diamond",
]

POSITIVITY = ("positive", "negative", "null", "unknown")
INFINITE = "infinite"

LeafCount = Union[int, str, None]


@dataclass(frozen=True)
class HodgeDiamond:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if self.n < 0 or len(rows) != self.n + 1 or any(len(r) != self.n + 1 for r in rows):
            raise ValueError(f"diamond with n={self.n} needs a {self.n + 1}x{self.n + 1} matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_matrix(cls, rows) -> "HodgeDiamond":
        rows = [list(r) for r in rows]
        return cls(len(rows) - 1, tuple(tuple(r) for r in rows))

    @classmethod
    def diagonal(cls, diag) -> "HodgeDiamond":
        n = len(diag) - 1
        return cls(n, tuple(tuple(diag[p] if p == q else 0 for q in range(n + 1)) for p in range(n + 1)))

    def __getitem__(self, pq) -> int:
        p, q = pq
        if 0 <= p <= self.n and 0 <= q <= self.n:
            return self.entries[p][q]
        return 0

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self.entries[k][k] for k in range(self.n + 1))

    def off_diagonal_support(self) -> list[tuple[int, int]]:
        return [(p, q) for p in range(self.n + 1) for q in range(self.n + 1)
                if p != q and self.entries[p][q] != 0]

    def offset_sum(self, s: int) -> int:
        """``sum_p h^{p, p+s}``."""
        return sum(self[p, p + s] for p in range(self.n + 1))

    def render(self) -> str:
        """Tilted text picture with ``h^{n,n}`` on top and ``h^{0,0}`` at the bottom."""
        n = self.n
        rows = []
        for d in range(2 * n, -1, -1):
            rows.append([self.entries[p][d - p] for p in range(min(d, n), max(0, d - n) - 1, -1)])
        width = max(len(str(x)) for row in rows for x in row) + 2
        lines = []
        for row in rows:
            pad = (n + 1 - len(row)) * width // 2
            lines.append(" " * pad + "".join(str(x).center(width) for x in row))
        return "\n".join(line.rstrip() for line in lines)


@dataclass(frozen=True)
class RuleResult:
    rule: str
    passed: bool
    witnesses: tuple = ()
    note: str = ""

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "passed": self.passed,
            "witnesses": [list(w) if isinstance(w, tuple) else w for w in self.witnesses],
            "note": self.note,
        }


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    results: tuple[RuleResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failed(self) -> list[RuleResult]:
        return [r for r in self.results if not r.passed]

    def rule(self, name: str) -> RuleResult:
        for r in self.results:
            if r.rule == name:
                return r
        raise KeyError(name)

    def __add__(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(self.subject, self.results + other.results)

    def to_json(self) -> dict:
        return {"subject": self.subject, "ok": self.ok, "results": [r.to_json() for r in self.results]}

    def render(self) -> str:
        lines = []
        for r in self.results:
            line = f"  [{'PASS' if r.passed else 'FAIL'}] {r.rule}"
            if r.witnesses:
                line += " at " + ", ".join(str(w) for w in r.witnesses)
            if r.note:
                line += f"  ({r.note})"
            lines.append(line)
        return "\n".join(lines)


@dataclass(frozen=True)
class SasakiStructureRecord:
    """Computable invariants of a Sasakian structure.

    ``closed_leaf_count`` is a positive int, ``"infinite"``, or ``None``
    when unknown. Nothing is checked at construction time.
    """

    name: str
    diamond: HodgeDiamond
    closed_leaf_count: LeafCount = None
    positivity: str = "unknown"

    def __post_init__(self):
        if self.positivity not in POSITIVITY:
            raise ValueError(f"positivity must be one of {POSITIVITY}")
        c = self.closed_leaf_count
        if not (c is None or c == INFINITE or (isinstance(c, int) and c > 0)):
            raise ValueError(f"closed_leaf_count must be a positive int, {INFINITE!r} or None")

    @property
    def has_finite_closed_leaves(self) -> bool:
        return isinstance(self.closed_leaf_count, int)


# -- constructors -------------------------------------------------------------

def diamond_from_flag(flag: FlagCohomology) -> HodgeDiamond:
    """Diamond of the deformed homogeneous structure: ``h^{k,k} = b^{2k}(G/H)``."""
    flag.check_invariants()
    return HodgeDiamond.diagonal([flag.betti[2 * k] for k in range(flag.complex_dimension + 1)])


def sphere_diamond(n: int) -> HodgeDiamond:
    """Diamond of any Sasakian structure on a real cohomology ``(2n+1)``-sphere."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return HodgeDiamond.diagonal([1] * (n + 1))


def points_diamond(count: int) -> HodgeDiamond:
    """Zero-dimensional leaf space of ``count`` isolated closed leaves."""
    return HodgeDiamond(0, ((count,),))


def betti_from_diamond(diamond: HodgeDiamond) -> tuple[int, ...]:
    n = diamond.n
    return tuple(sum(diamond[p, k - p] for p in range(k + 1)) for k in range(2 * n + 1))


def closed_leaf_count_from_flag(flag: FlagCohomology) -> int:
    chi = flag.euler
    if sum(flag.betti) != chi or eval_at_one(flag.poincare) != chi:
        raise OracleMismatch("closed-leaf count disagrees with total Betti number")
    if sum(betti_from_diamond(diamond_from_flag(flag))) != chi:
        raise OracleMismatch("diamond total differs from Euler number")
    return chi


# -- validators ---------------------------------------------------------------

def validate_diamond(diamond: HodgeDiamond, *, lefschetz: bool = False,
                     subject: str = "diamond") -> ValidationReport:
    """Check the Hodge-theoretic constraints on a basic Hodge diamond.

    Rules: ``corner`` (``h^{0,0} = h^{n,n} = 1``), ``conjugation``
    (``h^{p,q} = h^{q,p}``), ``duality`` (``h^{p,q} = h^{n-q,n-p}``),
    ``nonnegative``, and with ``lefschetz=True`` also ``lefschetz``
    (``h^{p,q} <= h^{p+1,q+1}`` whenever ``p + q < n``).
    """
    n, h = diamond.n, diamond
    idx = [(p, q) for p in range(n + 1) for q in range(n + 1)]
    corner = [pq for pq in ((0, 0), (n, n)) if h[pq] != 1]
    conj = [(p, q) for p, q in idx if p < q and h[p, q] != h[q, p]]
    dual = [(p, q) for p, q in idx if (p, q) < (n - q, n - p) and h[p, q] != h[n - q, n - p]]
    neg = [(p, q) for p, q in idx if h[p, q] < 0]
    results = [
        RuleResult("corner", not corner, tuple(sorted(set(corner)))),
        RuleResult("conjugation", not conj, tuple(conj)),
        RuleResult("duality", not dual, tuple(dual)),
        RuleResult("nonnegative", not neg, tuple(neg)),
    ]
    if lefschetz:
        bad = [(p, q) for p, q in idx if p + q < n and p < n and q < n and h[p, q] > h[p + 1, q + 1]]
        results.append(RuleResult("lefschetz", not bad, tuple(bad)))
    return ValidationReport(subject, tuple(results))


def check_finite_closed_leaves_vanishing(record: SasakiStructureRecord, *,
                                         assume_finite: bool = False) -> ValidationReport:
    """With finitely many closed leaves every off-diagonal ``h^{p,q}`` vanishes.

    ``assume_finite`` asks whether a structure with finitely many closed
    leaves is compatible with the diamond, whatever the record claims.
    """
    if not (assume_finite or record.has_finite_closed_leaves):
        raise PreconditionViolated(
            f"{record.name}: closed-leaf count is {record.closed_leaf_count!r}, not finite"
        )
    support = record.diamond.off_diagonal_support()
    note = "" if record.has_finite_closed_leaves else "finiteness assumed"
    return ValidationReport(record.name, (RuleResult("finite-leaves-vanishing", not support, tuple(support), note),))


def check_positivity_vanishing(record: SasakiStructureRecord, *,
                               assume_positive: bool = False) -> ValidationReport:
    """For positive structures ``h^{p,0} = h^{0,q} = 0`` when ``p, q > 0``."""
    if not (assume_positive or record.positivity == "positive"):
        raise PreconditionViolated(f"{record.name}: positivity is {record.positivity!r}")
    h = record.diamond
    bad = [(p, 0) for p in range(1, h.n + 1) if h[p, 0] != 0]
    bad += [(0, q) for q in range(1, h.n + 1) if h[0, q] != 0]
    note = "" if record.positivity == "positive" else "positivity assumed"
    return ValidationReport(record.name, (RuleResult("positivity-vanishing", not bad, tuple(sorted(bad)), note),))


def carrell_lieberman_check(diamond_m: HodgeDiamond, diamond_c: HodgeDiamond,
                            dim_c: int) -> ValidationReport:
    """Compare offset sums ``sum_p h^{p,p+s}`` of ``M`` with those of the
    closed-leaf space ``C``, and require ``h^{p,p+s}(M) = 0`` for
    ``|s| > dim_c``.
    """
    if dim_c < 0:
        raise ValueError("dim_c must be nonnegative")
    span = max(diamond_m.n, diamond_c.n)
    results = []
    for s in range(-span, span + 1):
        sm, sc = diamond_m.offset_sum(s), diamond_c.offset_sum(s)
        results.append(RuleResult(f"offset-sum[s={s}]", sm == sc, () if sm == sc else (s,), f"M={sm} C={sc}"))
        if abs(s) > dim_c:
            nz = [(p, p + s) for p in range(diamond_m.n + 1) if diamond_m[p, p + s] != 0]
            results.append(RuleResult(f"offset-vanishing[s={s}]", not nz, tuple(nz)))
    return ValidationReport("carrell-lieberman", tuple(results))


# -- fixtures and JSON --------------------------------------------------------

def builtin_fixtures() -> list[SasakiStructureRecord]:
    """Two structures on ``21 # (S^2 x S^3)`` and generic spheres ``S^3 .. S^11``.

    The first is the regular circle bundle over a K3 surface, the second a
    positive structure given by a weighted hypersurface link. Spheres use a
    generic Reeb field with ``n + 1`` closed leaves.
    """
    k3 = SasakiStructureRecord(
        "k3_bundle",
        HodgeDiamond.from_matrix([[1, 0, 1], [0, 20, 0], [1, 0, 1]]),
        INFINITE,
        "null",
    )
    link = SasakiStructureRecord(
        "positive_link",
        HodgeDiamond.diagonal([1, 22, 1]),
        INFINITE,
        "positive",
    )
    spheres = [
        SasakiStructureRecord(f"sphere_{2 * n + 1}", sphere_diamond(n), n + 1, "positive")
        for n in range(1, 6)
    ]
    return [k3, link] + spheres


def record_to_json(record: SasakiStructureRecord) -> dict:
    out = {"n": record.diamond.n, "h": [list(r) for r in record.diamond.entries], "name": record.name}
    if record.closed_leaf_count is not None:
        out["closed_leaves"] = record.closed_leaf_count
    out["positivity"] = record.positivity
    return out


def record_from_json(data: dict) -> SasakiStructureRecord:
    if not isinstance(data, dict) or "n" not in data or "h" not in data:
        raise ValueError('diamond JSON needs "n" and "h"')
    n, h = data["n"], data["h"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError('"n" must be an integer')
    if not isinstance(h, list) or not all(isinstance(r, list) for r in h):
        raise ValueError('"h" must be a list of lists')
    if any(not isinstance(x, int) or isinstance(x, bool) for r in h for x in r):
        raise ValueError('"h" entries must be integers')
    leaves = data.get("closed_leaves")
    if leaves is not None and leaves != INFINITE and (not isinstance(leaves, int) or isinstance(leaves, bool)):
        raise ValueError('"closed_leaves" must be an integer or "infinite"')
    return SasakiStructureRecord(
        data.get("name", "diamond"),
        HodgeDiamond(n, tuple(tuple(r) for r in h)),
        leaves,
        data.get("positivity", "unknown"),
    )
