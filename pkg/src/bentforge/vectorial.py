"""Vectorial functions F_2^m -> F_2^m: permutation and differential analyses.

Covers APN / vanishing-flat machinery, vectorial linear structures,
subspaces with vanishing second-order derivatives, and the P1/P2
permutation properties used to control M-subspaces of x.pi(y)+h(y).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import gf2
from .boolfun import (
    BooleanFunction,
    format_anf,
    parse_anf,
    to_anf,
    _parity_array,
)
from .gf2 import Subspace, orthogonal_complement, span


class VectorialFunction:
    """A map F_2^m -> F_2^m stored as a value table."""

    __slots__ = ("m", "table")

    def __init__(self, m: int, table) -> None:
        if not 1 <= m <= gf2.MAX_DIM:
            raise ValueError(f"m must be in 1..{gf2.MAX_DIM}, got {m}")
        t = np.asarray(table, dtype=np.int64)
        if t.shape != (1 << m,):
            raise ValueError(f"table length must be 2^{m}")
        if t.min() < 0 or t.max() >> m:
            raise ValueError("table entries out of range")
        self.m = m
        self.table = t.copy()
        self.table.flags.writeable = False

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VectorialFunction)
            and self.m == other.m
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self) -> int:
        return hash((self.m, self.table.tobytes()))

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __repr__(self) -> str:
        return f"VectorialFunction(m={self.m})"


def identity_map(m: int) -> VectorialFunction:
    return VectorialFunction(m, np.arange(1 << m))


def from_coordinates(coords: list[BooleanFunction]) -> VectorialFunction:
    m = len(coords)
    if any(c.n != m for c in coords):
        raise ValueError("coordinate functions must all be on m variables")
    table = np.zeros(1 << m, dtype=np.int64)
    for j, c in enumerate(coords):
        table |= c.table.astype(np.int64) << j
    return VectorialFunction(m, table)


def coordinates(F: VectorialFunction) -> list[BooleanFunction]:
    return [
        BooleanFunction(F.m, ((F.table >> j) & 1).astype(np.uint8)) for j in range(F.m)
    ]


def component(F: VectorialFunction, b: int) -> BooleanFunction:
    """The component function x -> b.F(x)."""
    return BooleanFunction(F.m, _parity_array(F.table & b))


def algebraic_degree_vf(F: VectorialFunction) -> int:
    return max(to_anf(c).degree for c in coordinates(F))


def is_permutation(F: VectorialFunction) -> bool:
    return bool(np.array_equal(np.sort(F.table), np.arange(1 << F.m)))


def derivative_vf(F: VectorialFunction, a: int) -> np.ndarray:
    idx = np.arange(1 << F.m)
    return F.table ^ F.table[idx ^ a]


def second_derivative_vanishes_vf(F: VectorialFunction, a: int, b: int) -> bool:
    """Whether D_a D_b F is identically 0_m."""
    idx = np.arange(1 << F.m)
    d = F.table ^ F.table[idx ^ a]
    return bool(np.array_equal(d, d[idx ^ b]))


def vanishing_pair_adjacency(table: np.ndarray) -> list[int]:
    """Bitmask adjacency of the vanishing-pair graph of a table.

    adj[a] has bit b set iff D_a D_b(table) is identically zero, for
    nonzero a != b.  Works for Boolean (0/1) and vectorial tables alike.
    """
    N = len(table)
    idx = np.arange(N)
    all_b = idx[:, None] ^ idx[None, :]
    adj = [0] * N
    for a in range(1, N):
        d = table ^ table[idx ^ a]
        eq = ~(d[all_b] != d[None, :]).any(axis=1)
        eq[0] = False
        eq[a] = False
        packed = np.packbits(eq.view(np.uint8), bitorder="little")
        adj[a] = int.from_bytes(packed.tobytes(), "little")
    return adj


def vanishing_pair_adjacency_quadratic(table: np.ndarray) -> list[int]:
    """Adjacency shortcut when all second derivatives are constant:
    evaluate D_a D_b at 0 only."""
    N = len(table)
    idx = np.arange(N)
    grid = table[0] ^ table[idx[:, None]] ^ table[idx[None, :]] ^ table[idx[:, None] ^ idx[None, :]]
    eq = grid == 0
    eq[:, 0] = False
    np.fill_diagonal(eq, False)
    adj = [0] * N
    for a in range(1, N):
        packed = np.packbits(eq[a].view(np.uint8), bitorder="little")
        adj[a] = int.from_bytes(packed.tobytes(), "little")
    return adj


def _adjacency_for(F: VectorialFunction) -> list[int]:
    if algebraic_degree_vf(F) <= 2:
        return vanishing_pair_adjacency_quadratic(F.table)
    return vanishing_pair_adjacency(F.table)


def iter_pair_representatives(m: int):
    """One (a, b) pair per 2-dimensional subspace of F_2^m."""
    N = 1 << m
    for a in range(1, N):
        for b in range(a + 1, N):
            if (a ^ b) > b:
                yield a, b


def is_apn(F: VectorialFunction) -> bool:
    """APN: every derivative equation F(x+a)+F(x)=b has 0 or 2 solutions."""
    N = 1 << F.m
    idx = np.arange(N)
    for a in range(1, N):
        counts = np.bincount(F.table ^ F.table[idx ^ a], minlength=N)
        if counts.max() > 2:
            return False
    return True


def vanishing_flats_count(F: VectorialFunction) -> int:
    """|{ {x1..x4} distinct : sum xi = 0, sum F(xi) = 0 }|.

    Counted per derivative value: each flat is seen once for each of its
    three direction pairings, giving the /3.
    """
    N = 1 << F.m
    idx = np.arange(N)
    total = 0
    for a in range(1, N):
        counts = np.bincount(F.table ^ F.table[idx ^ a], minlength=N)
        pairs = counts // 2  # unordered {x, x+a} pairs per value
        total += int((pairs * (pairs - 1) // 2).sum())
    assert total % 3 == 0
    return total // 3


def linear_structures_vf(F: VectorialFunction) -> set[int]:
    """All s (including 0) with D_s F constant as a vector."""
    idx = np.arange(1 << F.m)
    out = set()
    for a in range(1 << F.m):
        d = F.table ^ F.table[idx ^ a]
        if d.min() == d.max():
            out.add(a)
    return out


def vanishing_subspaces_vf(F: VectorialFunction, r: int) -> list[Subspace]:
    """All r-dimensional S with D_a D_b F = 0_m for all a, b in S."""
    if not 1 <= r <= F.m:
        raise ValueError(f"need 1 <= r <= m, got r={r}")
    if r == 1:
        # D_a D_a = 0, so every line vanishes
        return [span([a], F.m) for a in range(1, 1 << F.m)]
    adj = _adjacency_for(F)
    out = [span(list(gens), F.m) for gens in iter_clique_subspaces(adj, 1 << F.m, r)]
    return sorted(out, key=lambda s: s.basis)


def iter_clique_subspaces(adj: list[int], N: int, r: int, max_dim: int | None = None):
    """Yield generator tuples of subspaces whose nonzero elements are
    pairwise adjacent in adj (a "clique that is a subspace").

    Generators form the unique increasing tower of the subspace (each new
    generator is the minimum of its coset), so every subspace is produced
    exactly once.  Yields dimension r exactly, or 2..max_dim when set.
    """
    lo = r if max_dim is None else 2
    hi = r if max_dim is None else max_dim

    def extend(elems: set[int], gens: tuple[int, ...], cand: int):
        depth = len(gens)
        if depth >= lo:
            yield gens
        if depth == hi:
            return
        if depth < lo and depth + cand.bit_count() < lo:
            return
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            if all(v < (v ^ u) for u in elems if u):
                yield from extend(
                    elems | {v ^ u for u in elems},
                    gens + (v,),
                    cand & adj[v] & ~((low << 1) - 1),
                )

    yield from extend({0}, (), (1 << N) - 2)


def has_p1(F: VectorialFunction) -> tuple[bool, Subspace | None]:
    """P1: D_v D_w F != 0_m for every 2-dimensional span <v, w>.

    Returns (True, None) or (False, witness 2-space).
    """
    if algebraic_degree_vf(F) <= 2:
        N = 1 << F.m
        idx = np.arange(N)
        grid = F.table[0] ^ F.table[idx[:, None]] ^ F.table[idx[None, :]] ^ F.table[
            idx[:, None] ^ idx[None, :]
        ]
        for a, b in iter_pair_representatives(F.m):
            if grid[a, b] == 0:
                return False, span([a, b], F.m)
        return True, None
    for a, b in iter_pair_representatives(F.m):
        if second_derivative_vanishes_vf(F, a, b):
            return False, span([a, b], F.m)
    return True, None


@dataclass(frozen=True)
class P2SubspaceRecord:
    S: Subspace
    k: int
    dim_US: int
    ok: bool


@dataclass(frozen=True)
class P2Report:
    fully_satisfies: bool
    per_subspace: tuple[P2SubspaceRecord, ...]
    max_vanishing_dim: int


def check_p2(F: VectorialFunction) -> P2Report:
    """Check the P2 property of a nonlinear permutation.

    For every subspace S with vanishing second derivatives and
    1 <= dim(S) <= m-2, computes U_S = {u : u . D_a F(y) = 0 for all
    a in S\\{0} and all y} and requires dim(U_S) < k = m - dim(S).
    A vanishing S of dimension m-1 fails the report outright.
    """
    m = F.m
    if not is_permutation(F):
        raise ValueError("P2 is defined for permutations")
    if algebraic_degree_vf(F) <= 1:
        raise ValueError("P2 is defined for nonlinear permutations")
    adj = _adjacency_for(F)
    records = []
    max_dim = 1  # every line vanishes trivially
    gens_list: list[tuple[int, ...]] = [(a,) for a in range(1, 1 << m)]
    gens_list += list(iter_clique_subspaces(adj, 1 << m, 2, max_dim=m - 1))
    ok_all = True
    for gens in gens_list:
        S = span(list(gens), m)
        max_dim = max(max_dim, S.dim)
        if S.dim > m - 2:
            ok_all = False  # a vanishing (m-1)-space already forces a second M-subspace
            continue
        image = [int(v) for a in S.elements() if a for v in set(derivative_vf(F, a).tolist())]
        US = orthogonal_complement(span(image, m))
        k = m - S.dim
        ok = US.dim < k
        records.append(P2SubspaceRecord(S, k, US.dim, ok))
        ok_all = ok_all and ok
    return P2Report(ok_all, tuple(records), max_dim)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

_VF_RE = re.compile(r"^vf:m=(\d+):([0-9a-fA-F ]+)$")


def to_vf_text(F: VectorialFunction) -> str:
    return f"vf:m={F.m}:" + " ".join(f"{v:x}" for v in F.table)


def from_vf_text(text: str) -> VectorialFunction:
    m = _VF_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a vectorial-function literal: {text[:40]!r}")
    deg = int(m.group(1))
    vals = [int(v, 16) for v in m.group(2).split()]
    if len(vals) != 1 << deg:
        raise ValueError(f"expected {1 << deg} values, got {len(vals)}")
    return VectorialFunction(deg, np.array(vals, dtype=np.int64))


def from_coordinate_anfs(text: str) -> VectorialFunction:
    """Parse m newline-separated coordinate ANFs (variables x/y/z 1..m)."""
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    m = len(rows)
    return from_coordinates([BooleanFunction(m, _anf_table(r, m)) for r in rows])


def _anf_table(text: str, n: int) -> np.ndarray:
    from .boolfun import from_anf

    return from_anf(parse_anf(text, n)).table


def to_coordinate_anfs(F: VectorialFunction, var: str = "y") -> str:
    return "\n".join(format_anf(to_anf(c), var=var) for c in coordinates(F))
