"""Exhaustive verification of the extremal statements at small order.

Every labeled digraph on n vertices is an integer code: bit p of the code is
arc cell p in the row-major list of off-diagonal cells (0,1), (0,2), ...,
(n-1, n-2).  Codes are scanned in ascending order, filtered to the strongly
connected ones, and reduced to per-parameter extremal statistics:

* for each parameter value (girth, clique number, vertex or arc connectivity)
  the minimum and maximum radius per alpha, all codes within 1e-8 of the
  extremum, and the runner-up value beyond that band;
* the global top radius buckets per alpha (for second-maximum statements);
* spectral bound violations (row-sum sandwich, cycle/complete equalities,
  strict alpha * max-out-degree lower bound).

The code space splits into contiguous ranges merged by a deterministic
reducer, so multi-process scans reproduce the serial result exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import families, formulas
from .digraph import (
    Digraph,
    _arc_connectivity,
    _clique_number,
    _girth,
    _vertex_connectivity,
    arc_connectivity,
    is_isomorphic,
    vertex_connectivity,
)
from .spectral import (
    DEFAULT_MAX_ITERS,
    DEFAULT_TOL,
    NotStronglyConnected,
    batch_cw_radius,
    spectral_radius,
    spectral_radius_general,
)

__all__ = [
    "ENUM_CAP",
    "ATTAIN_TOL",
    "SCAN_PARAMETERS",
    "THEOREM_IDS",
    "GroupExtreme",
    "TopBucket",
    "ScanStats",
    "ExtremalGroup",
    "ExtremalReport",
    "VerificationVerdict",
    "Problem41Report",
    "digraph_from_code",
    "code_of_digraph",
    "enumerate_strong",
    "run_scan",
    "extremal_scan",
    "verify_theorem",
    "explore_problem_4_1",
    "subdivision_sweep",
]

ENUM_CAP = 6
ATTAIN_TOL = 1e-8
GROUP_CODE_CAP = 16384
TOP_KEEP = 512
VIOLATION_CAP = 50
CHUNK_BITS = 16

SCAN_PARAMETERS = ("girth", "clique", "vertex_conn", "arc_conn", "arc_conn_tight")
PUBLIC_PARAMETERS = ("girth", "clique", "vertex_conn", "arc_conn")

ENUM_THEOREMS = ("T3.1", "T4.1", "T5.3", "R5.1", "T6.3", "T6.4", "T6.5")
FORMULA_THEOREMS = ("L3.1", "L4.1")
THEOREM_IDS = ENUM_THEOREMS + FORMULA_THEOREMS


# ---------------------------------------------------------------------------
# code encoding

def _cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def digraph_from_code(n: int, code: int) -> Digraph:
    cells = _cells(n)
    if not 0 <= code < (1 << len(cells)):
        raise ValueError(f"code {code} out of range for n={n}")
    return Digraph(
        n, frozenset(cell for p, cell in enumerate(cells) if (code >> p) & 1)
    )


def code_of_digraph(G: Digraph) -> int:
    code = 0
    for p, (i, j) in enumerate(_cells(G.n)):
        if G.has_arc(i, j):
            code |= 1 << p
    return code


@dataclass(frozen=True)
class _CellTables:
    """Per-n constant arrays used by the vectorized decoder."""

    nbits: int
    ci: np.ndarray
    cj: np.ndarray
    row_weights: np.ndarray  # (nbits, n) int64: 1 << j scattered to row i
    col_weights: np.ndarray
    squarings: int


_CELL_CACHE: dict[int, _CellTables] = {}


def _tables(n: int) -> _CellTables:
    if n not in _CELL_CACHE:
        cells = _cells(n)
        nb = len(cells)
        ci = np.array([c[0] for c in cells], dtype=np.int64)
        cj = np.array([c[1] for c in cells], dtype=np.int64)
        rw = np.zeros((nb, n), dtype=np.int64)
        cw = np.zeros((nb, n), dtype=np.int64)
        for p, (i, j) in enumerate(cells):
            rw[p, i] = 1 << j
            cw[p, j] = 1 << i
        sq = 1
        while (1 << sq) < n - 1:
            sq += 1
        _CELL_CACHE[n] = _CellTables(nb, ci, cj, rw, cw, max(sq, 1))
    return _CELL_CACHE[n]


def _decode_strong_chunk(n: int, lo: int, hi: int):
    """Strongly connected codes in [lo, hi) with adjacency and mask arrays.

    Strong connectivity is decided by boolean closure (repeated squaring of
    A + I), which doubles as an independent check on the BFS-based predicate
    used elsewhere.
    """
    t = _tables(n)
    codes = np.arange(lo, hi, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(t.nbits)) & 1).astype(np.uint8)
    # cheap necessary condition first: no vertex may have empty in or out set
    rowmask = bits @ t.row_weights
    colmask = bits @ t.col_weights
    keep = (rowmask > 0).all(axis=1) & (colmask > 0).all(axis=1)
    codes, bits = codes[keep], bits[keep]
    rowmask, colmask = rowmask[keep], colmask[keep]
    if codes.size == 0:
        empty = np.zeros((0, n, n), dtype=np.uint8)
        return codes, empty, rowmask, colmask
    adj = np.zeros((codes.size, n, n), dtype=np.uint8)
    adj[:, t.ci, t.cj] = bits
    reach = adj.copy()
    eye = np.arange(n)
    reach[:, eye, eye] = 1
    for _ in range(t.squarings):
        reach = (np.einsum("bij,bjk->bik", reach, reach) > 0).astype(np.uint8)
    strong = reach.reshape(codes.size, -1).all(axis=1)
    return codes[strong], adj[strong], rowmask[strong], colmask[strong]


def enumerate_strong(n: int, long_runs_enabled: bool = False) -> Iterable[Digraph]:
    """Yield every strongly connected digraph on n vertices in code order."""
    _check_enum_order(n, long_runs_enabled)
    total = 1 << (n * (n - 1))
    step = 1 << CHUNK_BITS
    for lo in range(0, total, step):
        codes, _adj, _rm, _cm = _decode_strong_chunk(n, lo, min(lo + step, total))
        for code in codes.tolist():
            yield digraph_from_code(n, code)


def _check_enum_order(n: int, long_runs_enabled: bool) -> None:
    if not 2 <= n <= ENUM_CAP:
        raise ValueError(f"enumeration supports 2 <= n <= {ENUM_CAP}, got {n}")
    if n == ENUM_CAP and not long_runs_enabled:
        raise ValueError(
            f"n = {ENUM_CAP} scans 2^{ENUM_CAP * (ENUM_CAP - 1)} codes; "
            "enable long runs to allow it"
        )


# ---------------------------------------------------------------------------
# streaming extremal statistics

@dataclass(frozen=True)
class GroupExtreme:
    value: float
    codes: tuple[int, ...]
    count: int
    runner_up: float | None
    overflow: bool

    @property
    def gap(self) -> float | None:
        if self.runner_up is None:
            return None
        return abs(self.runner_up - self.value)


@dataclass(frozen=True)
class TopBucket:
    value: float
    codes: tuple[int, ...]
    count: int
    complete: bool


class _Extreme:
    """One streaming extremum: best value, attaining codes, runner-up."""

    __slots__ = ("mode", "best", "entries", "runner", "overflow")

    def __init__(self, mode: str):
        self.mode = mode
        self.best: float | None = None
        self.entries: list[tuple[float, int]] = []
        self.runner: float | None = None
        self.overflow = False

    def _improves(self, a: float, b: float) -> bool:
        return a < b if self.mode == "min" else a > b

    def _threshold(self) -> float:
        assert self.best is not None
        return self.best + ATTAIN_TOL if self.mode == "min" else self.best - ATTAIN_TOL

    def _inside(self, vals: np.ndarray) -> np.ndarray:
        thr = self._threshold()
        return vals <= thr if self.mode == "min" else vals >= thr

    def _note_runner(self, v: float) -> None:
        if self.runner is None or self._improves(v, self.runner):
            self.runner = v

    def update(self, vals: np.ndarray, codes: np.ndarray) -> None:
        if vals.size == 0:
            return
        batch_best = float(vals.min() if self.mode == "min" else vals.max())
        if self.best is None:
            self.best = batch_best
        elif self._improves(batch_best, self.best):
            self.best = batch_best
            thr = self._threshold()
            kept = []
            for v, c in self.entries:
                if (v <= thr) if (self.mode == "min") else (v >= thr):
                    kept.append((v, c))
                else:
                    self._note_runner(v)
            self.entries = kept
        inside = self._inside(vals)
        outside = vals[~inside]
        if outside.size:
            cand = float(outside.min() if self.mode == "min" else outside.max())
            self._note_runner(cand)
        room = GROUP_CODE_CAP - len(self.entries)
        take_v = vals[inside]
        take_c = codes[inside]
        if take_v.size > room:
            self.overflow = True
            take_v = take_v[:room]
            take_c = take_c[:room]
        self.entries.extend(zip(take_v.tolist(), take_c.tolist()))

    def absorb(self, other: "_Extreme") -> None:
        if other.best is None:
            return
        if other.runner is not None:
            self._note_runner(other.runner)
        if self.best is None or self._improves(other.best, self.best):
            self.best = other.best
        self.overflow |= other.overflow
        thr = self._threshold()
        for v, c in other.entries:
            if (v <= thr) if (self.mode == "min") else (v >= thr):
                if len(self.entries) >= GROUP_CODE_CAP:
                    self.overflow = True
                    break
                self.entries.append((v, c))
            else:
                self._note_runner(v)
        # merged best may beat the earlier threshold; re-filter
        thr = self._threshold()
        kept = []
        for v, c in self.entries:
            if (v <= thr) if (self.mode == "min") else (v >= thr):
                kept.append((v, c))
            else:
                self._note_runner(v)
        self.entries = kept

    def finalized(self) -> GroupExtreme:
        assert self.best is not None
        thr = self._threshold()
        codes = []
        for v, c in self.entries:
            if (v <= thr) if (self.mode == "min") else (v >= thr):
                codes.append(c)
            else:
                self._note_runner(v)
        codes.sort()
        return GroupExtreme(
            value=self.best,
            codes=tuple(codes),
            count=len(codes),
            runner_up=self.runner,
            overflow=self.overflow,
        )


class _Top:
    """Largest radii seen, enough to resolve the top few value buckets."""

    __slots__ = ("entries", "truncated", "cutoff")

    def __init__(self):
        self.entries: list[tuple[float, int]] = []
        self.truncated = False
        self.cutoff = -math.inf

    def update(self, vals: np.ndarray, codes: np.ndarray) -> None:
        if vals.size == 0:
            return
        if vals.size > TOP_KEEP:
            idx = np.argpartition(-vals, TOP_KEEP)[:TOP_KEEP]
            idx.sort()
            dropped = float(np.partition(-vals, TOP_KEEP)[TOP_KEEP] * -1)
            self.truncated = True
            self.cutoff = max(self.cutoff, dropped)
            vals, codes = vals[idx], codes[idx]
        self.entries.extend(zip(vals.tolist(), codes.tolist()))
        self._prune()

    def _prune(self) -> None:
        if len(self.entries) <= 4 * TOP_KEEP:
            return
        self.entries.sort(key=lambda e: (-e[0], e[1]))
        for v, _c in self.entries[TOP_KEEP:]:
            self.truncated = True
            if v > self.cutoff:
                self.cutoff = v
        del self.entries[TOP_KEEP:]

    def absorb(self, other: "_Top") -> None:
        self.entries.extend(other.entries)
        self.truncated |= other.truncated
        self.cutoff = max(self.cutoff, other.cutoff)
        self._prune()

    def finalized(self, buckets: int = 3) -> list[TopBucket]:
        self.entries.sort(key=lambda e: (-e[0], e[1]))
        entries = self.entries[:TOP_KEEP]
        if len(self.entries) > TOP_KEEP:
            self.truncated = True
            self.cutoff = max(self.cutoff, entries[-1][0])
        out: list[TopBucket] = []
        i = 0
        while i < len(entries) and len(out) < buckets:
            anchor = entries[i][0]
            codes = []
            while i < len(entries) and entries[i][0] >= anchor - ATTAIN_TOL:
                codes.append(entries[i][1])
                i += 1
            bucket_min = anchor - ATTAIN_TOL
            complete = (not self.truncated) or (bucket_min > self.cutoff)
            out.append(
                TopBucket(
                    value=anchor,
                    codes=tuple(sorted(codes)),
                    count=len(codes),
                    complete=complete,
                )
            )
        return out


class _Bounds:
    """Spectral bound checks folded over every enumerated digraph."""

    __slots__ = ("checked", "violations")

    def __init__(self):
        self.checked = 0
        self.violations: list[dict] = []

    def note(self, name: str, codes: np.ndarray, lam: np.ndarray, mask: np.ndarray) -> None:
        if not mask.any():
            return
        for idx in np.flatnonzero(mask):
            if len(self.violations) >= VIOLATION_CAP:
                return
            self.violations.append(
                {"check": name, "code": int(codes[idx]), "radius": float(lam[idx])}
            )

    def absorb(self, other: "_Bounds") -> None:
        self.checked += other.checked
        room = VIOLATION_CAP - len(self.violations)
        if room > 0:
            self.violations.extend(other.violations[:room])


class _Accumulator:
    """Partial scan state for one code range; merged by the reducer."""

    def __init__(self, n: int, alphas: tuple[float, ...], parameters: tuple[str, ...]):
        self.n = n
        self.alphas = alphas
        self.parameters = parameters
        self.total = 0
        self.strong = 0
        self.groups: dict[tuple[str, int], list[dict[str, _Extreme]]] = {}
        self.top = [_Top() for _ in alphas]
        self.bounds = [_Bounds() for _ in alphas]
        self.max_width = 0.0
        self.max_iterations = 0

    def group_cell(self, param: str, value: int, ai: int) -> dict[str, _Extreme]:
        key = (param, value)
        if key not in self.groups:
            self.groups[key] = [
                {"min": _Extreme("min"), "max": _Extreme("max")}
                for _ in self.alphas
            ]
        return self.groups[key][ai]

    def absorb(self, other: "_Accumulator") -> None:
        self.total += other.total
        self.strong += other.strong
        self.max_width = max(self.max_width, other.max_width)
        self.max_iterations = max(self.max_iterations, other.max_iterations)
        for key, cells in other.groups.items():
            for ai, cell in enumerate(cells):
                mine = self.group_cell(key[0], key[1], ai)
                mine["min"].absorb(cell["min"])
                mine["max"].absorb(cell["max"])
        for ai in range(len(self.alphas)):
            self.top[ai].absorb(other.top[ai])
            self.bounds[ai].absorb(other.bounds[ai])


def _scan_chunk(acc: _Accumulator, lo: int, hi: int, tol: float, max_iters: int) -> None:
    n = acc.n
    acc.total += hi - lo
    codes, adj, rowmask, colmask = _decode_strong_chunk(n, lo, hi)
    s = codes.size
    acc.strong += s
    if s == 0:
        return

    outdeg = adj.sum(axis=2).astype(np.int64)
    indeg = adj.sum(axis=1).astype(np.int64)
    min_out = outdeg.min(axis=1)
    max_out = outdeg.max(axis=1)
    delta0 = np.minimum(min_out, indeg.min(axis=1))
    narcs = outdeg.sum(axis=1)

    # combinatorial parameters, one python pass over the chunk
    need_girth = "girth" in acc.parameters
    need_clique = "clique" in acc.parameters
    need_vc = "vertex_conn" in acc.parameters
    need_ac = (
        "arc_conn" in acc.parameters
        or "arc_conn_tight" in acc.parameters
        or need_vc
    )
    girth_a = np.zeros(s, dtype=np.int64)
    clique_a = np.zeros(s, dtype=np.int64)
    vc_a = np.zeros(s, dtype=np.int64)
    ac_a = np.zeros(s, dtype=np.int64)
    if need_girth or need_clique or need_ac:
        rows_list = rowmask.tolist()
        cols_list = colmask.tolist()
        for t in range(s):
            rows = rows_list[t]
            cols = cols_list[t]
            if need_girth:
                girth_a[t] = _girth(rows, cols, n)
            if need_clique:
                clique_a[t] = _clique_number(
                    [rows[i] & cols[i] for i in range(n)], n
                )
            if need_ac:
                ac = _arc_connectivity(rows, cols, n)
                ac_a[t] = ac
                if need_vc:
                    vc_a[t] = _vertex_connectivity(rows, cols, n, upper=ac)

    # certified radii, batched per alpha
    base = adj.astype(np.float64)
    eye = np.arange(n)
    lam_by_alpha = []
    for alpha in acc.alphas:
        m = (1.0 - alpha) * base
        m[:, eye, eye] += alpha * outdeg
        lam, lo_c, hi_c, iters = batch_cw_radius(m, tol=tol, max_iters=max_iters)
        acc.max_width = max(acc.max_width, float((hi_c - lo_c).max()))
        acc.max_iterations = max(acc.max_iterations, int(iters.max()))
        lam_by_alpha.append(lam)

    # group statistics
    param_arrays: dict[str, tuple[np.ndarray, np.ndarray]] = {}
    full_mask = np.ones(s, dtype=bool)
    if need_girth:
        param_arrays["girth"] = (girth_a, full_mask)
    if need_clique:
        param_arrays["clique"] = (clique_a, full_mask)
    if need_vc:
        param_arrays["vertex_conn"] = (vc_a, full_mask)
    if "arc_conn" in acc.parameters:
        param_arrays["arc_conn"] = (ac_a, full_mask)
    if "arc_conn_tight" in acc.parameters:
        param_arrays["arc_conn_tight"] = (ac_a, ac_a == delta0)
    for param, (arr, mask) in param_arrays.items():
        if param not in acc.parameters:
            continue
        for value in np.unique(arr[mask]).tolist():
            gmask = mask & (arr == value)
            gcodes = codes[gmask]
            for ai in range(len(acc.alphas)):
                vals = lam_by_alpha[ai][gmask]
                cell = acc.group_cell(param, int(value), ai)
                cell["min"].update(vals, gcodes)
                cell["max"].update(vals, gcodes)

    # global top buckets and bound checks
    is_cycle = (narcs == n) & (max_out == 1)
    is_complete = narcs == n * (n - 1)
    out_regular = min_out == max_out
    for ai, alpha in enumerate(acc.alphas):
        lam = lam_by_alpha[ai]
        acc.top[ai].update(lam, codes)
        b = acc.bounds[ai]
        b.checked += s
        b.note("radius_below_one", codes, lam, lam < 1.0 - 1e-9)
        b.note("radius_above_n_minus_one", codes, lam, lam > n - 1.0 + 1e-9)
        near_one = np.abs(lam - 1.0) <= 1e-9
        b.note("radius_one_but_not_cycle", codes, lam, near_one & ~is_cycle)
        b.note("cycle_radius_not_one", codes, lam, is_cycle & ~near_one)
        near_top = np.abs(lam - (n - 1.0)) <= 1e-9
        b.note("top_radius_but_not_complete", codes, lam, near_top & ~is_complete)
        b.note("complete_radius_off", codes, lam, is_complete & ~near_top)
        reg_eq = np.abs(lam - min_out) <= 1e-9
        b.note("regular_radius_off_degree", codes, lam, out_regular & ~reg_eq)
        strict_inside = (lam > min_out + 1e-9) & (lam < max_out - 1e-9)
        b.note("irregular_radius_hits_degree", codes, lam, ~out_regular & ~strict_inside)
        if alpha > 0.0:
            b.note(
                "radius_not_above_alpha_maxdeg",
                codes,
                lam,
                lam <= alpha * max_out + 1e-12,
            )


def _scan_worker(task) -> _Accumulator:
    n, lo, hi, alphas, parameters, tol, max_iters = task
    acc = _Accumulator(n, alphas, parameters)
    step = 1 << CHUNK_BITS
    for clo in range(lo, hi, step):
        _scan_chunk(acc, clo, min(clo + step, hi), tol, max_iters)
    return acc


@dataclass(frozen=True)
class ScanStats:
    n: int
    alphas: tuple[float, ...]
    parameters: tuple[str, ...]
    tol: float
    total_codes: int
    strong_count: int
    groups: dict
    top: dict
    bounds: dict
    max_certificate_width: float
    max_iterations: int

    def alpha_index(self, alpha: float) -> int:
        for i, a in enumerate(self.alphas):
            if abs(a - alpha) <= 1e-15:
                return i
        raise KeyError(f"alpha {alpha} was not part of this scan (have {self.alphas})")

    def group(self, parameter: str, value: int, alpha: float, mode: str) -> GroupExtreme | None:
        self.alpha_index(alpha)
        key = (parameter, int(value))
        if key not in self.groups:
            return None
        return self.groups[key][self.alpha_index(alpha)][mode]

    def group_values(self, parameter: str) -> list[int]:
        return sorted(v for (p, v) in self.groups if p == parameter)

    def top_buckets(self, alpha: float) -> list[TopBucket]:
        return self.top[self.alpha_index(alpha)]

    def bound_report(self, alpha: float) -> dict:
        return self.bounds[self.alpha_index(alpha)]


def run_scan(
    n: int,
    alphas: Sequence[float],
    parameters: Sequence[str] = SCAN_PARAMETERS,
    tol: float = DEFAULT_TOL,
    max_iters: int = DEFAULT_MAX_ITERS,
    workers: int = 1,
    long_runs_enabled: bool = False,
) -> ScanStats:
    """Scan every strongly connected digraph on n vertices.

    Returns per-parameter extremal statistics for every requested alpha.
    With workers > 1 the code space is split into contiguous ranges handled
    by a process pool; the merged result is identical to the serial one.
    """
    _check_enum_order(n, long_runs_enabled)
    alphas = tuple(float(a) for a in alphas)
    if len(set(alphas)) != len(alphas):
        raise ValueError("duplicate alpha values")
    for a in alphas:
        if not 0.0 <= a < 1.0:
            raise ValueError(f"alpha must lie in [0, 1), got {a}")
    parameters = tuple(parameters)
    unknown = set(parameters) - set(SCAN_PARAMETERS)
    if unknown:
        raise ValueError(f"unknown scan parameters {sorted(unknown)}")
    total = 1 << (n * (n - 1))
    if workers <= 1:
        acc = _scan_worker((n, 0, total, alphas, parameters, tol, max_iters))
    else:
        import multiprocessing as mp

        step = 1 << CHUNK_BITS
        nranges = min(max(workers * 4, 1), max(total // step, 1))
        bounds = np.linspace(0, total, nranges + 1, dtype=np.int64)
        bounds = np.unique((bounds // step) * step)
        if bounds[-1] != total:
            bounds = np.append(bounds, total)
        tasks = [
            (n, int(bounds[i]), int(bounds[i + 1]), alphas, parameters, tol, max_iters)
            for i in range(len(bounds) - 1)
            if bounds[i] < bounds[i + 1]
        ]
        acc = _Accumulator(n, alphas, parameters)
        with mp.Pool(processes=workers) as pool:
            for part in pool.imap(_scan_worker, tasks):
                acc.absorb(part)
    groups = {
        key: [
            {"min": cells[ai]["min"].finalized(), "max": cells[ai]["max"].finalized()}
            for ai in range(len(alphas))
        ]
        for key, cells in acc.groups.items()
    }
    top = {ai: acc.top[ai].finalized() for ai in range(len(alphas))}
    bounds_out = {
        ai: {"checked": acc.bounds[ai].checked, "violations": list(acc.bounds[ai].violations)}
        for ai in range(len(alphas))
    }
    return ScanStats(
        n=n,
        alphas=alphas,
        parameters=parameters,
        tol=tol,
        total_codes=acc.total,
        strong_count=acc.strong,
        groups={k: v for k, v in sorted(groups.items())},
        top={ai: top[ai] for ai in top},
        bounds=bounds_out,
        max_certificate_width=acc.max_width,
        max_iterations=acc.max_iterations,
    )


# ---------------------------------------------------------------------------
# isomorphism grouping and reports

def _iso_classes(n: int, codes: Sequence[int]) -> list[tuple[Digraph, int, int]]:
    """(representative, member count, first code) per isomorphism class."""
    classes: list[tuple[Digraph, int, int]] = []
    for code in codes:
        g = digraph_from_code(n, code)
        for i, (rep, count, first) in enumerate(classes):
            if is_isomorphic(g, rep):
                classes[i] = (rep, count + 1, first)
                break
        else:
            classes.append((g, 1, code))
    return classes


@dataclass(frozen=True)
class ExtremalGroup:
    parameter_value: int
    radius: float
    attaining_count: int
    class_count: int
    representatives: tuple[Digraph, ...]
    runner_up: float | None
    overflow: bool


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    alpha: float
    parameter: str
    mode: str
    entries: tuple[ExtremalGroup, ...]


def extremal_scan(
    n: int,
    alpha: float,
    parameter: str,
    mode: str = "max",
    scan: ScanStats | None = None,
    tol: float = DEFAULT_TOL,
    workers: int = 1,
    long_runs_enabled: bool = False,
) -> ExtremalReport:
    """Extremal radii per parameter value with isomorphism-class summary."""
    if parameter not in PUBLIC_PARAMETERS:
        raise ValueError(f"parameter must be one of {PUBLIC_PARAMETERS}, got {parameter!r}")
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    if scan is None:
        scan = run_scan(
            n, (alpha,), (parameter,), tol=tol, workers=workers,
            long_runs_enabled=long_runs_enabled,
        )
    entries = []
    for value in scan.group_values(parameter):
        ext = scan.group(parameter, value, alpha, mode)
        classes = _iso_classes(n, ext.codes)
        entries.append(
            ExtremalGroup(
                parameter_value=value,
                radius=ext.value,
                attaining_count=ext.count,
                class_count=len(classes),
                representatives=tuple(rep for rep, _c, _f in classes),
                runner_up=ext.runner_up,
                overflow=ext.overflow,
            )
        )
    return ExtremalReport(
        n=n, alpha=float(alpha), parameter=parameter, mode=mode, entries=tuple(entries)
    )


# ---------------------------------------------------------------------------
# theorem verification

@dataclass(frozen=True)
class VerificationVerdict:
    theorem: str
    n: int
    alphas: tuple[float, ...]
    status: str  # "confirmed" | "violated" | "vacuous"
    details: tuple[str, ...]
    witnesses: tuple[Digraph, ...]


def _classes_match(
    n: int, codes: Sequence[int], expected: Sequence[Digraph]
) -> tuple[bool, str]:
    """Do the attaining codes form exactly the expected isomorphism classes?"""
    reps = []
    for g in expected:
        if not any(is_isomorphic(g, r) for r in reps):
            reps.append(g)
    seen = [False] * len(reps)
    for code in codes:
        g = digraph_from_code(n, code)
        for i, r in enumerate(reps):
            if is_isomorphic(g, r):
                seen[i] = True
                break
        else:
            return False, f"code {code} attains but is not isomorphic to any expected digraph"
    for i, flag in enumerate(seen):
        if not flag:
            return False, f"expected class {i} does not attain the extremum"
    return True, "exact class match"


def _scan_for(
    n: int,
    alphas: tuple[float, ...],
    needed: tuple[str, ...],
    scan: ScanStats | None,
    tol: float,
    workers: int,
    long_runs_enabled: bool,
) -> ScanStats:
    if scan is not None:
        if scan.n != n:
            raise ValueError(f"scan was built for n={scan.n}, need n={n}")
        for a in alphas:
            scan.alpha_index(a)
        missing = set(needed) - set(scan.parameters)
        if missing:
            raise ValueError(f"scan lacks parameters {sorted(missing)}")
        return scan
    return run_scan(
        n, alphas, needed, tol=tol, workers=workers, long_runs_enabled=long_runs_enabled
    )


def verify_theorem(
    theorem: str,
    n: int,
    alphas: Sequence[float] = (0.0, 0.5),
    scan: ScanStats | None = None,
    tol: float = DEFAULT_TOL,
    workers: int = 1,
    long_runs_enabled: bool = False,
) -> VerificationVerdict:
    """Check one extremal statement exhaustively (or by formula for L-ids)."""
    alphas = tuple(float(a) for a in alphas)
    details: list[str] = []
    witnesses: list[Digraph] = []

    if theorem in FORMULA_THEOREMS:
        if not 3 <= n <= 12:
            raise ValueError(f"{theorem} supports 3 <= n <= 12, got {n}")
        family = families.c_ng if theorem == "L3.1" else families.b_nd
        # Strictness is decided on certified enclosures: the inequality holds
        # when the primed interval lies entirely above the unprimed one.  The
        # true gaps shrink towards 1e-10 at n = 12, so the enclosures are
        # tightened well past the default certificate width.
        strict_tol = min(tol, 1e-13)
        ok = True
        for alpha in alphas:
            min_sep = None
            arg = None
            for p in range(2, n):
                base = spectral_radius(family(n, p), alpha, tol=strict_tol)
                primed = spectral_radius(family(n, p, primed=True), alpha, tol=strict_tol)
                sep = primed.certificate_lo - base.certificate_hi
                if min_sep is None or sep < min_sep:
                    min_sep, arg = sep, p
                if sep <= 0.0:
                    ok = False
                    details.append(
                        f"alpha={alpha}: parameter {p}: certified enclosures overlap "
                        f"(separation {sep:.3e}); strict increase not established"
                    )
                    witnesses.append(family(n, p, primed=True))
            if ok and min_sep is not None:
                details.append(
                    f"alpha={alpha}: primed radius certified strictly larger for "
                    f"every parameter; smallest separation {min_sep:.3e} at parameter {arg}"
                )
        return VerificationVerdict(
            theorem, n, alphas, "confirmed" if ok else "violated",
            tuple(details), tuple(witnesses),
        )

    if theorem not in ENUM_THEOREMS:
        raise ValueError(f"unknown theorem id {theorem!r}; expected one of {THEOREM_IDS}")

    needed = {
        "T3.1": ("girth",),
        "T4.1": ("clique",),
        "T5.3": ("vertex_conn",),
        "R5.1": (),  # only the always-collected top radius buckets matter
        "T6.3": ("arc_conn_tight",),
        "T6.4": ("arc_conn",),
        "T6.5": ("vertex_conn", "arc_conn"),
    }[theorem]
    stats = _scan_for(n, alphas, needed, scan, tol, workers, long_runs_enabled)

    ok = True
    vacuous = True

    def fail(msg: str, code: int | None = None) -> None:
        nonlocal ok
        ok = False
        details.append(msg)
        if code is not None:
            witnesses.append(digraph_from_code(n, code))

    if theorem in ("T3.1", "T4.1"):
        build = families.c_ng if theorem == "T3.1" else families.b_nd
        for alpha in alphas:
            for p in range(2, n):
                ext = stats.group(
                    "girth" if theorem == "T3.1" else "clique", p, alpha, "min"
                )
                if ext is None:
                    details.append(f"alpha={alpha}: no digraphs with parameter {p}")
                    continue
                vacuous = False
                expected = build(n, p)
                want = spectral_radius(expected, alpha, tol=tol).radius
                if abs(ext.value - want) > ATTAIN_TOL:
                    fail(
                        f"alpha={alpha}, parameter {p}: scan minimum {ext.value!r} "
                        f"!= family radius {want!r}"
                    )
                    continue
                if ext.overflow:
                    fail(f"alpha={alpha}, parameter {p}: attaining set overflowed")
                    continue
                match, why = _classes_match(n, ext.codes, [expected])
                if not match:
                    fail(f"alpha={alpha}, parameter {p}: {why}", ext.codes[0])
                else:
                    details.append(
                        f"alpha={alpha}, parameter {p}: unique minimizer class, "
                        f"radius {ext.value:.12g}, runner-up gap "
                        f"{(ext.runner_up - ext.value):.3e}"
                        if ext.runner_up is not None
                        else f"alpha={alpha}, parameter {p}: unique minimizer class"
                    )

    elif theorem in ("T5.3", "T6.3", "T6.4"):
        param = {"T5.3": "vertex_conn", "T6.3": "arc_conn_tight", "T6.4": "arc_conn"}[theorem]
        for alpha in alphas:
            for k in range(1, n - 1):
                ext = stats.group(param, k, alpha, "max")
                if ext is None:
                    details.append(f"alpha={alpha}: no digraphs with parameter {k}")
                    continue
                vacuous = False
                want = formulas.max_vertex_conn_radius(n, k, alpha)
                if abs(ext.value - want) > ATTAIN_TOL:
                    fail(
                        f"alpha={alpha}, k={k}: scan maximum {ext.value!r} != "
                        f"closed form {want!r}"
                    )
                    continue
                if ext.overflow:
                    fail(f"alpha={alpha}, k={k}: attaining set overflowed")
                    continue
                if alpha == 0.0:
                    expected = [families.k_nkm(n, k, 1), families.k_nkm(n, k, n - k - 1)]
                else:
                    expected = [families.k_nkm(n, k, n - k - 1)]
                match, why = _classes_match(n, ext.codes, expected)
                if not match:
                    fail(f"alpha={alpha}, k={k}: {why}", ext.codes[0])
                else:
                    details.append(
                        f"alpha={alpha}, k={k}: maximizer classes as stated, "
                        f"radius {ext.value:.12g}"
                    )

    elif theorem == "R5.1":
        for alpha in alphas:
            buckets = stats.top_buckets(alpha)
            if len(buckets) < 3:
                fail(f"alpha={alpha}: fewer than three distinct radius levels")
                continue
            vacuous = False
            first, second, third = buckets[0], buckets[1], buckets[2]
            comp = families.complete(n)
            if not (first.complete and second.complete):
                fail(f"alpha={alpha}: top buckets truncated; raise the keep limit")
                continue
            match1, why1 = _classes_match(n, first.codes, [comp])
            if not match1:
                fail(f"alpha={alpha}: top bucket: {why1}", first.codes[0])
                continue
            want = formulas.second_max_radius(n, alpha)
            if abs(second.value - want) > ATTAIN_TOL:
                fail(
                    f"alpha={alpha}: second maximum {second.value!r} != closed form {want!r}"
                )
                continue
            expected = families.k_nkm(n, n - 2, 1)
            match2, why2 = _classes_match(n, second.codes, [expected])
            if not match2:
                fail(f"alpha={alpha}: second bucket: {why2}", second.codes[0])
            else:
                details.append(
                    f"alpha={alpha}: second maximum {second.value:.12g} attained only "
                    f"by the one-arc-deleted complete digraph; next level at "
                    f"{third.value:.12g}"
                )

    elif theorem == "T6.5":
        for alpha in alphas:
            for param in ("vertex_conn", "arc_conn"):
                for k in range(1, n - 1):
                    ext = stats.group(param, k, alpha, "min")
                    if ext is None:
                        details.append(f"alpha={alpha}: no digraphs with {param}={k}")
                        continue
                    vacuous = False
                    if abs(ext.value - k) > 1e-9:
                        fail(
                            f"alpha={alpha}, {param}={k}: minimum {ext.value!r} != {k}"
                        )
                        continue
                    if ext.overflow:
                        fail(f"alpha={alpha}, {param}={k}: attaining set overflowed")
                        continue
                    bad = None
                    for code in ext.codes:
                        g = digraph_from_code(n, code)
                        outs = {g.out_degree(v) for v in range(n)}
                        ins = {g.in_degree(v) for v in range(n)}
                        if outs != {k} or ins != {k}:
                            bad = code
                            break
                    if bad is not None:
                        fail(
                            f"alpha={alpha}, {param}={k}: attaining code {bad} "
                            "is not k-regular",
                            bad,
                        )
                        continue
                    witness = families.circulant(n, range(1, k + 1))
                    wcode = code_of_digraph(witness)
                    if wcode not in ext.codes:
                        fail(
                            f"alpha={alpha}, {param}={k}: consecutive circulant "
                            "witness does not attain the minimum"
                        )
                        continue
                    if vertex_connectivity(witness) != k or arc_connectivity(witness) != k:
                        fail(
                            f"alpha={alpha}, {param}={k}: circulant witness has "
                            "unexpected connectivity"
                        )
                        continue
                    details.append(
                        f"alpha={alpha}, {param}={k}: minimum is exactly {k}, "
                        f"all {ext.count} attaining digraphs are {k}-regular"
                    )

    status = "vacuous" if (ok and vacuous) else ("confirmed" if ok else "violated")
    return VerificationVerdict(theorem, n, alphas, status, tuple(details), tuple(witnesses))


# ---------------------------------------------------------------------------
# open-problem exploration and the subdivision sweep

@dataclass(frozen=True)
class Problem41Report:
    n: int
    rows: tuple[dict, ...]
    note: str = (
        "exploratory report on an open problem: rows compare the block "
        "construction against the enumerated maximum and assert nothing"
    )


def explore_problem_4_1(
    n: int,
    d: int | None = None,
    alphas: Sequence[float] = (0.0, 0.25, 0.5, 0.75),
    scan: ScanStats | None = None,
    tol: float = DEFAULT_TOL,
    workers: int = 1,
    long_runs_enabled: bool = False,
) -> Problem41Report:
    """Gap table: block-construction radius vs. scanned maximum per clique number.

    With d=None every clique number 1..n-1 is tabulated.
    """
    alphas = tuple(float(a) for a in alphas)
    if d is not None and not 1 <= d <= n - 1:
        raise ValueError(f"need 1 <= d <= n-1, got d={d} at n={n}")
    stats = _scan_for(n, alphas, ("clique",), scan, tol, workers, long_runs_enabled)
    rows = []
    for d_val in ([d] if d is not None else range(1, n)):
        for alpha in alphas:
            cand = families.g0(n, d_val, alpha, long_runs_enabled=long_runs_enabled)
            try:
                g0_radius = spectral_radius(cand, alpha, tol=tol).radius
            except NotStronglyConnected:
                g0_radius = spectral_radius_general(cand, alpha, tol=tol)
            ext = stats.group("clique", d_val, alpha, "max")
            if ext is None:
                rows.append(
                    {
                        "n": n, "d": d_val, "alpha": alpha, "g0_radius": g0_radius,
                        "scan_max": None, "gap": None, "classes_match": None,
                        "status": "empty",
                    }
                )
                continue
            gap = ext.value - g0_radius
            match, _why = _classes_match(n, ext.codes, [cand])
            rows.append(
                {
                    "n": n,
                    "d": d_val,
                    "alpha": alpha,
                    "g0_radius": g0_radius,
                    "scan_max": ext.value,
                    "gap": gap,
                    "classes_match": match,
                    "status": "agrees" if abs(gap) <= ATTAIN_TOL and match else "differs",
                }
            )
    return Problem41Report(n=n, rows=tuple(rows))


def subdivision_sweep(
    n: int,
    alphas: Sequence[float] = (0.0, 0.5),
    tol: float = DEFAULT_TOL,
    max_iters: int = DEFAULT_MAX_ITERS,
    chunk_bits: int = 13,
) -> dict:
    """Subdivide every arc of every strongly connected non-cycle digraph on n
    vertices and check the radius never increases (within 1e-9)."""
    if not 2 <= n <= 5:
        raise ValueError(f"the exhaustive subdivision sweep supports 2 <= n <= 5, got {n}")
    alphas = tuple(float(a) for a in alphas)
    t = _tables(n)
    total = 1 << t.nbits
    step = 1 << chunk_bits
    eye_n = np.arange(n)
    eye_w = np.arange(n + 1)
    checked = 0
    violations: list[dict] = []
    max_excess = -math.inf
    for lo in range(0, total, step):
        codes, adj, _rm, _cm = _decode_strong_chunk(n, lo, min(lo + step, total))
        if codes.size == 0:
            continue
        outdeg = adj.sum(axis=2).astype(np.int64)
        narcs = outdeg.sum(axis=1)
        not_cycle = ~((narcs == n) & (outdeg.max(axis=1) == 1))
        codes, adj, outdeg = codes[not_cycle], adj[not_cycle], outdeg[not_cycle]
        if codes.size == 0:
            continue
        base = adj.astype(np.float64)
        # one subdivided matrix per (digraph, arc)
        srcrow, uarr, varr = np.nonzero(adj)
        m = srcrow.size
        big = np.zeros((m, n + 1, n + 1), dtype=np.float64)
        big[:, :n, :n] = base[srcrow]
        rows_idx = np.arange(m)
        big[rows_idx, uarr, varr] = 0.0
        big[rows_idx, uarr, n] = 1.0
        big[rows_idx, n, varr] = 1.0
        bigdeg = big.sum(axis=2)
        for alpha in alphas:
            mb = (1.0 - alpha) * base
            mb[:, eye_n, eye_n] += alpha * outdeg
            lam_base, _, _, _ = batch_cw_radius(mb, tol=tol, max_iters=max_iters)
            mw = (1.0 - alpha) * big
            mw[:, eye_w, eye_w] += alpha * bigdeg
            lam_sub, _, _, _ = batch_cw_radius(mw, tol=tol, max_iters=max_iters)
            excess = lam_sub - lam_base[srcrow]
            checked += m
            worst = float(excess.max())
            if worst > max_excess:
                max_excess = worst
            bad = np.flatnonzero(excess > 1e-9)
            for idx in bad[:VIOLATION_CAP]:
                violations.append(
                    {
                        "code": int(codes[srcrow[idx]]),
                        "arc": (int(uarr[idx]), int(varr[idx])),
                        "alpha": alpha,
                        "base": float(lam_base[srcrow[idx]]),
                        "subdivided": float(lam_sub[idx]),
                    }
                )
    return {
        "n": n,
        "alphas": alphas,
        "checked": checked,
        "violations": violations,
        "max_excess": max_excess,
    }
