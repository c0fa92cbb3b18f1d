"""Partial spread class membership: Algorithm-style PS test, the PS# sweep
over shifts and affine offsets, and the Desarguesian PS_ap construction.

The PS candidate filter is subspace-first: instead of hunting cliques among
support vertices, every n/2-dimensional subspace U is tested for f = 1 on
U \\ {0} (provably the same set of candidates, since a clique that forms a
vector space is exactly such a subspace).  The full PS# sweep additionally
moves to the dual side: U is a candidate for g(x) = f(x+b)+a.x+c exactly
when f*(t) + t.b is near-constant on the coset a + U-perp, which turns the
per-(b, a) subspace scan into one vectorized coset-count pass per b.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .boolfun import BooleanFunction, _parity_array, dual, is_bent
from .gf2 import Subspace, enumerate_subspaces, orthogonal_complement, span

CACHE_ENV = "BENTFORGE_CACHE_DIR"
_CHECKPOINT_PAIRS = 1 << 12


@dataclass(frozen=True)
class PartialSpreadWitness:
    subclass: str  # "PS_plus" | "PS_minus"
    subspaces: tuple[Subspace, ...]

    def reconstruct(self, n: int) -> BooleanFunction:
        """Sum of indicators (with 0 removed for PS_minus)."""
        t = np.zeros(1 << n, dtype=np.uint8)
        for U in self.subspaces:
            for e in U.elements():
                if e or self.subclass == "PS_plus":
                    t[e] ^= 1
        return BooleanFunction(n, t)

    def as_dict(self) -> dict:
        return {
            "subclass": self.subclass,
            "subspaces": [U.to_text().split("\n") for U in self.subspaces],
        }


@dataclass(frozen=True)
class PsSharpWitness:
    shift: int
    affine: int
    constant: int
    inner: PartialSpreadWitness

    def as_dict(self) -> dict:
        return {
            "shift": self.shift,
            "affine": self.affine,
            "constant": self.constant,
            **self.inner.as_dict(),
        }


# ---------------------------------------------------------------------------
# per-dimension tables
# ---------------------------------------------------------------------------

_MASKS: dict[int, tuple[list[tuple[int, ...]], list[int]]] = {}
_COSET: dict[int, np.ndarray] = {}


def _midspace_masks(n: int) -> tuple[list[tuple[int, ...]], list[int]]:
    """All n/2-dimensional subspaces as (basis, bitmask of nonzero elements)."""
    if n > 8:
        raise ValueError("midspace mask table only built for n <= 8")
    if n not in _MASKS:
        bases = []
        masks = []
        for U in enumerate_subspaces(n, n // 2):
            mask = 0
            for e in U.elements():
                mask |= 1 << e
            bases.append(U.basis)
            masks.append(mask & ~1)  # drop the origin bit
        _MASKS[n] = (bases, masks)
    return _MASKS[n]


def _coset_table(n: int) -> np.ndarray:
    """Row i: the 2^n points grouped into cosets of the i-th n/2-subspace.

    Layout: 2^(n/2) blocks of 2^(n/2) entries; block k is the coset whose
    minimal representative is k-th smallest.  dtype uint8 needs n <= 8.
    """
    if n not in _COSET:
        if n > 8:
            raise ValueError("coset table only built for n <= 8")
        m = n // 2
        bases, _ = _midspace_masks(n)
        count = len(bases)
        perm = np.empty((count, 1 << n), dtype=np.uint8)
        pts = np.arange(1 << n, dtype=np.int16)
        chunk = 4096
        elems = np.zeros((count, 1 << m), dtype=np.int16)
        for i, basis in enumerate(bases):
            e = [0]
            for b in basis:
                e += [b ^ x for x in e]
            elems[i] = e
        for lo in range(0, count, chunk):
            hi = min(lo + chunk, count)
            E = elems[lo:hi]  # (c, 2^m)
            reps = np.min(E[:, None, :] ^ pts[None, :, None], axis=2)  # (c, 2^n)
            srt = np.sort(reps, axis=1)
            usr = srt[:, :: 1 << m]  # each min-rep appears 2^m times
            perm[lo:hi] = (usr[:, :, None] ^ E[:, None, :]).reshape(hi - lo, 1 << n)
        _COSET[n] = perm
    return _COSET[n]


# ---------------------------------------------------------------------------
# single-function PS test
# ---------------------------------------------------------------------------

def ps_candidates(f: BooleanFunction) -> list[int]:
    """Indices of n/2-subspaces with f = 1 on U \\ {0} (mask containment)."""
    support = 0
    for x in np.flatnonzero(f.table):
        support |= 1 << int(x)
    _, masks = _midspace_masks(f.n)
    return [i for i, mask in enumerate(masks) if mask & ~support == 0]


def _candidate_subspaces(f: BooleanFunction) -> list[Subspace]:
    """Candidate subspaces themselves; streams without tables for n = 10."""
    n = f.n
    if n <= 8:
        bases, _ = _midspace_masks(n)
        return [span(list(bases[i]), n) for i in ps_candidates(f)]
    t = f.table
    out = []
    for U in enumerate_subspaces(n, n // 2):
        if all(t[e] for e in U.elements() if e):
            out.append(U)
    return out


def _disjoint_clique(masks: list[int], s: int) -> list[int] | None:
    """Branch-and-bound search for s pairwise-disjoint masks."""
    L = len(masks)
    if L < s:
        return None
    nbr = []
    for i in range(L):
        bits = 0
        for j in range(L):
            if j != i and masks[i] & masks[j] == 0:
                bits |= 1 << j
        nbr.append(bits)

    def grow(chosen: list[int], allowed: int) -> list[int] | None:
        if len(chosen) == s:
            return chosen
        if len(chosen) + allowed.bit_count() < s:
            return None
        c = allowed
        while c:
            low = c & -c
            i = low.bit_length() - 1
            c ^= low
            got = grow(chosen + [i], c & nbr[i])
            if got is not None:
                return got
        return None

    return grow([], (1 << L) - 1)


def is_partial_spread(f: BooleanFunction) -> PartialSpreadWitness | None:
    """Membership in PS+ (f(0)=1) or PS- (f(0)=0) with an explicit witness.

    Subspace-first refinement of the clique formulation: candidates are the
    n/2-subspaces contained in the support, and a partial spread is a
    pairwise-trivially-intersecting family of s of them.
    """
    if not is_bent(f):
        raise ValueError("PS membership is defined for bent functions")
    n = f.n
    m = n // 2
    if f(0):
        subclass, s, want_weight = "PS_plus", (1 << (m - 1)) + 1, (1 << (n - 1)) + (1 << (m - 1))
    else:
        subclass, s, want_weight = "PS_minus", 1 << (m - 1), (1 << (n - 1)) - (1 << (m - 1))
    if f.weight() != want_weight:
        return None
    cand = _candidate_subspaces(f)
    cand_masks = []
    for U in cand:
        mask = 0
        for e in U.elements():
            mask |= 1 << e
        cand_masks.append(mask & ~1)
    clique = _disjoint_clique(cand_masks, s)
    if clique is None:
        return None
    witness = PartialSpreadWitness(subclass, tuple(cand[i] for i in clique))
    if witness.reconstruct(n) != f:  # unreachable given the weight filter
        return None
    return witness


# ---------------------------------------------------------------------------
# PS# sweep
# ---------------------------------------------------------------------------

def _shifted_affine(f: BooleanFunction, b: int, a: int, c: int) -> BooleanFunction:
    idx = np.arange(1 << f.n)
    return BooleanFunction(f.n, f.table[idx ^ b] ^ _parity_array(idx & a) ^ (c & 1))


def _sweep_one_b(f: BooleanFunction, dual_table: np.ndarray, b: int):
    """Candidate detection for every a at a fixed shift b.

    Returns (phi, hits_minus, hits_plus) where hits are (subspace index,
    coset block) pairs from the coset-count characterization.
    """
    n = f.n
    m = n // 2
    perm = _coset_table(n)
    idx = np.arange(1 << n)
    phi = dual_table ^ _parity_array(idx & b)
    sums = phi[perm].reshape(perm.shape[0], 1 << m, 1 << m).sum(axis=2, dtype=np.int16)
    fb = int(f.table[b])  # g(0) bookkeeping: f(b) decides the target counts
    t_minus = (1 << m) - 1 if fb == 0 else 1
    t_plus = 0 if fb == 0 else 1 << m
    hits_minus = np.argwhere(sums == t_minus)
    hits_plus = np.argwhere(sums == t_plus)
    return phi, hits_minus, hits_plus


def _try_pairs_for_b(f: BooleanFunction, b: int, phi, hits_minus, hits_plus):
    """Run the clique stage for every viable a at this b, ascending."""
    n = f.n
    m = n // 2
    perm = _coset_table(n)
    bases, _ = _midspace_masks(n)
    fb = int(f.table[b])
    per_a: dict[int, dict[str, list[int]]] = {}
    for tag, hits in (("PS_minus", hits_minus), ("PS_plus", hits_plus)):
        for w_idx, k in hits:
            block = perm[int(w_idx), (int(k) << m) : ((int(k) + 1) << m)]
            for a in block:
                per_a.setdefault(int(a), {}).setdefault(tag, []).append(int(w_idx))
    for a in sorted(per_a):
        if int(phi[a]) != fb:  # weight obstruction: g cannot be PS at all
            continue
        for tag in ("PS_minus", "PS_plus"):
            s = (1 << (m - 1)) + (1 if tag == "PS_plus" else 0)
            w_list = per_a[a].get(tag, [])
            if len(w_list) < s:
                continue
            c = fb ^ (1 if tag == "PS_plus" else 0)
            g = _shifted_affine(f, b, a, c)
            cands = []
            for w_idx in w_list:
                U = orthogonal_complement(span(list(bases[w_idx]), n))
                mask = 0
                for e in U.elements():
                    mask |= 1 << e
                cands.append((U, mask & ~1))
            clique = _disjoint_clique([mask for _, mask in cands], s)
            if clique is None:
                continue
            witness = PartialSpreadWitness(tag, tuple(cands[i][0] for i in clique))
            if witness.reconstruct(n) == g:
                return PsSharpWitness(b, a, c, witness)
    return None


class _SweepState:
    """Resumable checkpoint for a PS# sweep, keyed by function digest."""

    def __init__(self, path: Path | None, digest: str) -> None:
        self.path = path
        self.digest = digest
        self.next_b = 0
        self.finished = False
        self.witness_dict = None
        if path is not None and path.exists():
            data = json.loads(path.read_text())
            if data.get("digest") == digest:
                self.next_b = data.get("next_b", 0)
                self.finished = data.get("finished", False)
                self.witness_dict = data.get("witness")

    def save(self, witness=None, finished=False) -> None:
        if self.path is None:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "digest": self.digest,
            "next_b": self.next_b,
            "finished": finished,
            "witness": witness,
        }
        tmp = self.path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload))
        tmp.replace(self.path)


def _cache_path(f: BooleanFunction, resume: str | Path | None) -> Path | None:
    if resume is not None:
        return Path(resume)
    cache_dir = os.environ.get(CACHE_ENV)
    if cache_dir:
        return Path(cache_dir) / f"ps_sharp_{f.digest()}.json"
    return None


def is_in_ps_sharp(
    f: BooleanFunction,
    jobs: int = 1,
    resume: str | Path | None = None,
    progress=None,
) -> PsSharpWitness | None:
    """Sweep all shifts b and linear parts a for PS membership of
    x -> f(x+b) + a.x + c, with c forced by the subclass.

    Returns the first witness in (b, a) order, or None after the exhaustive
    sweep.  Checkpoints every 2^12 (b, a) pairs when a cache path is set
    via `resume` or the BENTFORGE_CACHE_DIR environment variable.
    """
    if not is_bent(f):
        raise ValueError("PS# membership is defined for bent functions")
    n = f.n
    if n > 8:
        # the n = 10 table is ~10^8 subspaces; the sweep is not desk-scale
        raise ValueError("PS# sweep supported for n <= 8")
    state = _SweepState(_cache_path(f, resume), f.digest())
    if state.finished:
        if state.witness_dict is None:
            return None
        return _witness_from_dict(state.witness_dict, n)

    dual_table = dual(f).table
    all_b = range(state.next_b, 1 << n)
    checkpoint_every = max(1, _CHECKPOINT_PAIRS >> n)

    def work(b):
        return b, _sweep_one_b(f, dual_table, b)

    def consume(b, payload):
        phi, hm, hp = payload
        return _try_pairs_for_b(f, b, phi, hm, hp)

    found = None
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for b, payload in pool.map(work, all_b):
                found = consume(b, payload)
                state.next_b = b + 1
                if found is not None:
                    break
                if progress:
                    progress(b)
                if (b + 1) % checkpoint_every == 0:
                    state.save()
    else:
        for b in all_b:
            _, payload = work(b)
            found = consume(b, payload)
            state.next_b = b + 1
            if found is not None:
                break
            if progress:
                progress(b)
            if (b + 1) % checkpoint_every == 0:
                state.save()
    state.save(
        witness=None if found is None else found.as_dict(), finished=True
    )
    return found


def _witness_from_dict(d: dict, n: int) -> PsSharpWitness:
    inner = PartialSpreadWitness(
        d["subclass"],
        tuple(Subspace.from_text("\n".join(rows), n) for rows in d["subspaces"]),
    )
    return PsSharpWitness(d["shift"], d["affine"], d["constant"], inner)


# ---------------------------------------------------------------------------
# PS_ap construction
# ---------------------------------------------------------------------------

def ps_ap(m: int, h: BooleanFunction, field=None) -> BooleanFunction:
    """Desarguesian partial spread bent function f(x, y) = h(x / y) on
    F_{2^m} x F_{2^m}, with x/0 = 0; h balanced with h(0) = 0."""
    from .gf2m import Field

    if h.n != m:
        raise ValueError(f"h must be on {m} variables")
    if h(0) != 0:
        raise ValueError("need h(0) = 0")
    if not h.is_balanced():
        raise ValueError("need h balanced")
    fld = field if field is not None else Field(m)
    table = np.zeros(1 << (2 * m), dtype=np.uint8)
    for y in range(1 << m):
        for x in range(1 << m):
            table[x + (y << m)] = h(fld.div(x, y))
    return BooleanFunction(2 * m, table)
