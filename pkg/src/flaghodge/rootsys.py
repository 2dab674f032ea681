"""Root systems, Weyl groups, exponents and parabolic quotients (types A-G).

Conventions
-----------
Nodes follow Bourbaki numbering (see ``DYNKIN_DIAGRAMS``) and are 1-based in
every public interface. The Cartan matrix is ``a[i][j] = <alpha_i^vee,
alpha_j>``, so for a double bond between a long node ``L`` and a short node
``S`` we have ``a[S][L] = -2`` and ``a[L][S] = -1``. Roots are integer
vectors in the simple-root basis; nothing in this module uses floats.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

from flaghodge import _core
from flaghodge.errors import (
    EnumerationBudgetExceeded,
    InvalidLevi,
    InvalidType,
    UnrecognizedDiagram,
)
from flaghodge.polyring import IntPolynomial

__all__ = [
    "DYNKIN_DIAGRAMS",
    "DEFAULT_BUDGET",
    "ExponentSet",
    "GroupSpec",
    "LeviSpec",
    "RootSystem",
    "WeylCosetData",
    "build_root_system",
    "enumeration_budget",
    "exponents",
    "levi_decompose",
    "levi_exponents",
    "parabolic_coset_data",
    "coset_length_counts",
    "weyl_length_polynomial",
    "weyl_order",
    "reflect_root",
    "supported_types",
]

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "FLAGHODGE_ENUM_BUDGET"

DYNKIN_DIAGRAMS = {
    "A": "A_n (n>=1):  1 - 2 - 3 - ... - n",
    "B": "B_n (n>=2):  1 - 2 - ... - (n-1) => n        (n short)",
    "C": "C_n (n>=3):  1 - 2 - ... - (n-1) <= n        (n long)",
    "D": (
        "D_n (n>=4):  1 - 2 - ... - (n-2) - (n-1)\n"
        "                            |\n"
        "                            n"
    ),
    "E": (
        "E_n (n=6,7,8):  1 - 3 - 4 - 5 - 6 [- 7 [- 8]]\n"
        "                        |\n"
        "                        2"
    ),
    "F": "F_4:  1 - 2 => 3 - 4        (1,2 long; 3,4 short)",
    "G": "G_2:  1 <= 2                (1 short, 2 long; triple bond)",
}


def enumeration_budget(budget: int | None = None) -> int:
    """Resolve an enumeration cap: explicit value, then env var, then default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_BUDGET


def _validate_type(cartan_type: str, rank: int) -> str:
    t = str(cartan_type).upper()
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 3,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if t not in ok or not isinstance(rank, int) or not ok[t]:
        raise InvalidType(f"no simple root system of type {cartan_type}{rank}")
    return t


def supported_types(max_rank: int) -> list[tuple[str, int]]:
    """All valid simple (type, rank) pairs of rank at most ``max_rank``."""
    out = []
    for t in "ABCDEFG":
        for r in range(1, max_rank + 1):
            try:
                _validate_type(t, r)
            except InvalidType:
                continue
            out.append((t, r))
    return out


def _dynkin_bonds(t: str, n: int):
    # (i, j, multiplicity, short node or None), 1-based
    bonds = []
    if t in "ABC":
        bonds = [(i, i + 1, 1, None) for i in range(1, n - 1)]
        if n >= 2:
            if t == "A":
                bonds.append((n - 1, n, 1, None))
            elif t == "B":
                bonds.append((n - 1, n, 2, n))
            else:
                bonds.append((n - 1, n, 2, n - 1))
    elif t == "D":
        bonds = [(i, i + 1, 1, None) for i in range(1, n - 1)]
        bonds.append((n - 2, n, 1, None))
    elif t == "E":
        bonds = [(1, 3, 1, None), (2, 4, 1, None)]
        bonds += [(i, i + 1, 1, None) for i in range(3, n)]
    elif t == "F":
        bonds = [(1, 2, 1, None), (2, 3, 2, 3), (3, 4, 1, None)]
    elif t == "G":
        bonds = [(1, 2, 3, 1)]
    return bonds


def _cartan_matrix(t: str, n: int) -> tuple[tuple[int, ...], ...]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, m, short in _dynkin_bonds(t, n):
        i, j = i - 1, j - 1
        if m == 1:
            a[i][j] = a[j][i] = -1
        else:
            s = short - 1
            l = j if s == i else i
            a[s][l] = -m
            a[l][s] = -1
    return tuple(tuple(row) for row in a)


def reflect_root(cartan: Sequence[Sequence[int]], i: int, root: Sequence[int]) -> tuple[int, ...]:
    """Apply the simple reflection ``s_i`` (0-based ``i``) to a root vector."""
    pairing = sum(cartan[i][j] * root[j] for j in range(len(root)))
    out = list(root)
    out[i] -= pairing
    return tuple(out)


def _positive_roots(cartan) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    rows = [[(j, a) for j, a in enumerate(cartan[i]) if a] for i in range(n)]
    touch = [[j for j, _ in rows[i]] for i in range(n)]  # a_ji != 0 iff a_ij != 0
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            support = [j for j, x in enumerate(beta) if x]
            if len(support) == 1 and beta[support[0]] == 1:
                skip = support[0]
            else:
                skip = -1
            for i in {k for j in support for k in touch[j]}:
                if i == skip:
                    continue
                pairing = sum(a * beta[j] for j, a in rows[i])
                if pairing:
                    gamma = list(beta)
                    gamma[i] -= pairing
                    gamma = tuple(gamma)
                    if gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
        frontier = nxt
    return tuple(sorted(seen, key=lambda v: (sum(v), tuple(-x for x in v))))


@dataclass(frozen=True)
class RootSystem:
    cartan_type: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...] = field(repr=False)
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def label(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    @property
    def simple_roots(self):
        return self.positive_roots[: self.rank]

    @property
    def coxeter_number(self) -> int:
        return sum(self.positive_roots[-1]) + 1

    def height_distribution(self) -> list[int]:
        """``counts[h - 1]`` is the number of positive roots of height ``h``."""
        c = Counter(sum(r) for r in self.positive_roots)
        return [c[h] for h in range(1, max(c) + 1)]

    def nodes(self) -> range:
        return range(1, self.rank + 1)


def build_root_system(cartan_type: str, rank: int) -> RootSystem:
    """Root system of a simple type with its full set of positive roots.

    Positive roots are generated by closing the simple roots under simple
    reflections.
    """
    return _build(_validate_type(cartan_type, rank), rank)


@lru_cache(maxsize=None)
def _build(t: str, rank: int) -> RootSystem:
    a = _cartan_matrix(t, rank)
    return RootSystem(t, rank, a, _positive_roots(a))


@dataclass(frozen=True)
class ExponentSet:
    """Weyl exponents ``m_i``; torus factors contribute ``m = 0``.

    ``degrees`` are the topological degrees ``2 m_i + 1`` of the primitive
    generators of the cohomology of the compact group; ``invariant_degrees``
    are ``m_i + 1``.
    """

    weyl_exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weyl_exponents", tuple(sorted(int(m) for m in self.weyl_exponents)))
        if any(m < 0 for m in self.weyl_exponents):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "ExponentSet":
        ms = []
        for g in degrees:
            if g < 1 or g % 2 == 0:
                raise ValueError(f"topological degree {g} is not a positive odd integer")
            ms.append((g - 1) // 2)
        return cls(tuple(ms))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(2 * m + 1 for m in self.weyl_exponents)

    @property
    def invariant_degrees(self) -> tuple[int, ...]:
        return tuple(m + 1 for m in self.weyl_exponents)

    @property
    def rank(self) -> int:
        return len(self.weyl_exponents)

    def __add__(self, other: "ExponentSet") -> "ExponentSet":
        return ExponentSet(self.weyl_exponents + other.weyl_exponents)


def exponents(root_system: RootSystem) -> ExponentSet:
    """Weyl exponents as the conjugate partition of the height distribution."""
    counts = root_system.height_distribution()
    ms = []
    for h, c in enumerate(counts, start=1):
        nxt = counts[h] if h < len(counts) else 0
        ms.extend([h] * (c - nxt))
    return ExponentSet(tuple(ms))


def weyl_order(root_system: RootSystem) -> int:
    return prod(m + 1 for m in exponents(root_system).weyl_exponents)


@dataclass(frozen=True)
class GroupSpec:
    simple_components: tuple[tuple[str, int], ...]
    torus_rank: int = 0

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.simple_components) + self.torus_rank

    @property
    def label(self) -> str:
        parts = [f"{t}{r}" for t, r in self.simple_components]
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return "x".join(parts) if parts else "1"

    def weyl_order(self) -> int:
        return prod(weyl_order(build_root_system(t, r)) for t, r in self.simple_components)

    def positive_root_count(self) -> int:
        return sum(len(build_root_system(t, r).positive_roots) for t, r in self.simple_components)


@dataclass(frozen=True)
class LeviSpec:
    """Node subset (Bourbaki, 1-based) spanning the Levi's semisimple part."""

    node_subset: tuple[int, ...] = ()

    def __post_init__(self):
        nodes = tuple(int(n) for n in self.node_subset)
        if len(set(nodes)) != len(nodes):
            raise InvalidLevi(f"duplicate nodes in {list(nodes)}")
        object.__setattr__(self, "node_subset", tuple(sorted(nodes)))

    def check(self, root_system: RootSystem) -> "LeviSpec":
        bad = [n for n in self.node_subset if not 1 <= n <= root_system.rank]
        if bad:
            raise InvalidLevi(f"nodes {bad} not in 1..{root_system.rank} for {root_system.label}")
        return self

    @classmethod
    def full(cls, root_system: RootSystem) -> "LeviSpec":
        return cls(tuple(root_system.nodes()))


@dataclass(frozen=True)
class WeylCosetData:
    """Minimal-length representatives of ``W / W_P``.

    Each representative is ``(word, length)`` with ``word`` a tuple of
    1-based simple reflection indices, lexicographically least among reduced
    words. Representatives are sorted by ``(length, word)``.
    """

    representatives: tuple[tuple[tuple[int, ...], int], ...]
    group_order: int
    subgroup_order: int

    def lengths(self) -> list[int]:
        return [length for _, length in self.representatives]

    def length_counts(self) -> list[int]:
        c = Counter(self.lengths())
        return [c[k] for k in range(max(c) + 1)]

    def __len__(self):
        return len(self.representatives)


def _dominant_start(root_system: RootSystem, levi: LeviSpec) -> tuple[int, ...]:
    inside = set(levi.node_subset)
    return tuple(0 if i in inside else 1 for i in root_system.nodes())


def _check_budget(size: int, budget: int | None) -> int:
    cap = enumeration_budget(budget)
    if size > cap:
        raise EnumerationBudgetExceeded(size, cap)
    return cap


def parabolic_coset_data(root_system: RootSystem, levi_spec: LeviSpec, *,
                         budget: int | None = None, backend: str | None = None) -> WeylCosetData:
    """Enumerate minimal coset representatives of ``W / W_P`` by BFS.

    The quotient is explored as the Weyl orbit of a dominant weight whose
    stabilizer is ``W_P``; the full group is never materialized.
    """
    levi_spec.check(root_system)
    group = weyl_order(root_system)
    sub = levi_decompose(root_system, levi_spec).weyl_order()
    cap = _check_budget(group // sub, budget)
    levels = _core.orbit_levels(
        root_system.cartan_matrix, _dominant_start(root_system, levi_spec), cap,
        max_abs_coord=root_system.coxeter_number - 1, backend=backend,
    )
    reps = []
    prev_words: list[tuple[int, ...]] = [()]
    reps.append(((), 0))
    for length, (_, parents, letters) in enumerate(levels[1:], start=1):
        words = [(letter + 1,) + prev_words[p] for p, letter in zip(parents, letters)]
        reps.extend((w, length) for w in sorted(words))
        prev_words = words
    return WeylCosetData(tuple(reps), group, sub)


def coset_length_counts(root_system: RootSystem, levi_spec: LeviSpec, *,
                        budget: int | None = None, backend: str | None = None) -> list[int]:
    """Number of minimal coset representatives of each length."""
    levi_spec.check(root_system)
    size = weyl_order(root_system) // levi_decompose(root_system, levi_spec).weyl_order()
    cap = _check_budget(size, budget)
    return _core.orbit_level_sizes(
        root_system.cartan_matrix, _dominant_start(root_system, levi_spec), cap,
        max_abs_coord=root_system.coxeter_number - 1, backend=backend,
    )


def weyl_length_polynomial(root_system: RootSystem, *, budget: int | None = None,
                           backend: str | None = None) -> IntPolynomial:
    """``sum_{w in W} t^{l(w)}`` by enumerating the whole group.

    Budget-capped; E8 (about 7e8 elements) is refused under the default cap.
    """
    return IntPolynomial(coset_length_counts(root_system, LeviSpec(), budget=budget, backend=backend))


# -- Levi subdiagram classification ------------------------------------------

def _components(cartan, nodes):
    nodes = list(nodes)
    remaining = set(nodes)
    comps = []
    for start in nodes:
        if start not in remaining:
            continue
        comp, stack = [], [start]
        remaining.discard(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in list(remaining):
                if cartan[v - 1][u - 1] != 0:
                    remaining.discard(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def _neighbours(cartan, comp, v):
    return sorted(u for u in comp if u != v and cartan[v - 1][u - 1] != 0)


def _walk(cartan, comp, start, blocked=()):
    # follow a simple path starting at `start`, never entering `blocked`
    path = [start]
    seen = set(blocked) | {start}
    while True:
        nxt = [u for u in _neighbours(cartan, comp, path[-1]) if u not in seen]
        if not nxt:
            return path
        seen.add(nxt[0])
        path.append(nxt[0])


def _classify_component(cartan, comp) -> tuple[str, int, list[int]]:
    n = len(comp)
    if n == 1:
        return "A", 1, list(comp)
    degree = {v: len(_neighbours(cartan, comp, v)) for v in comp}
    entries = {cartan[i - 1][j - 1] for i in comp for j in comp if i != j}
    if -3 in entries:
        short = next(i for i in comp for j in comp if cartan[i - 1][j - 1] == -3)
        long_ = next(v for v in comp if v != short)
        return "G", 2, [short, long_]
    branch = [v for v in comp if degree[v] == 3]
    if branch:
        b = branch[0]
        arms = sorted((_walk(cartan, comp, u, blocked=(b,)) for u in _neighbours(cartan, comp, b)),
                      key=lambda arm: (len(arm), arm))
        lens = tuple(len(a) for a in arms)
        if lens[:2] == (1, 1):
            order = list(reversed(arms[2])) + [b] + [arms[0][0], arms[1][0]]
            return "D", n, order
        if lens in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
            short_arm, mid_arm, long_arm = arms
            order = [mid_arm[1], short_arm[0], mid_arm[0], b] + long_arm
            return "E", n, order
        raise UnrecognizedDiagram(f"branched diagram with arms {lens}")
    ends = sorted(v for v in comp if degree[v] == 1)
    if -2 not in entries:
        return "A", n, _walk(cartan, comp, ends[0])
    # double bond: short node s has a[s][l] == -2
    s, l = next((i, j) for i in comp for j in comp if cartan[i - 1][j - 1] == -2)
    if n == 4 and degree[s] == 2 and degree[l] == 2:
        start = next(e for e in ends if e != _walk(cartan, comp, s, blocked=(l,))[-1])
        return "F", 4, _walk(cartan, comp, start)
    if degree[s] == 1:
        path = _walk(cartan, comp, s)
        return "B", n, list(reversed(path))
    if degree[l] == 1:
        path = _walk(cartan, comp, l)
        return "C", n, list(reversed(path))
    raise UnrecognizedDiagram("double bond in the interior of a chain")


def classify_subdiagram(root_system: RootSystem, nodes: Iterable[int]):
    """Components of the induced subdiagram as ``(type, rank, ordered_nodes)``.

    ``ordered_nodes`` lists the original node indices in the Bourbaki order
    of the recognized type; the induced Cartan matrix is checked against the
    canonical one under that ordering.
    """
    a = root_system.cartan_matrix
    out = []
    for comp in _components(a, sorted(nodes)):
        t, r, order = _classify_component(a, comp)
        try:
            ref = build_root_system(t, r).cartan_matrix
        except InvalidType as exc:
            raise UnrecognizedDiagram(str(exc)) from exc
        induced = tuple(tuple(a[i - 1][j - 1] for j in order) for i in order)
        if induced != ref or sorted(order) != comp:
            raise UnrecognizedDiagram(f"component {comp} does not match {t}{r}")
        out.append((t, r, order))
    return out


def levi_decompose(root_system: RootSystem, levi_spec: LeviSpec) -> GroupSpec:
    levi_spec.check(root_system)
    comps = classify_subdiagram(root_system, levi_spec.node_subset)
    return GroupSpec(
        tuple((t, r) for t, r, _ in comps),
        root_system.rank - len(levi_spec.node_subset),
    )


def levi_exponents(group_spec: GroupSpec) -> ExponentSet:
    ms: list[int] = [0] * group_spec.torus_rank
    for t, r in group_spec.simple_components:
        ms.extend(exponents(build_root_system(t, r)).weyl_exponents)
    return ExponentSet(tuple(ms))
