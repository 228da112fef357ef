"""Achievability decisions, closed-form predicates, and sweeps.

Ground truth is always exact linear algebra over GF(2): a target is
achievable iff it lies in the image of the generalized adjacency
matrix.  For the (symmetric) game matrices the decision goes through
kernel orthogonality, a witness push set comes from the solver, and a
failed target is accompanied by a certificate: a kernel vector not
orthogonal to it.

The closed-form predicates (the two-dimensional parity/valuation
criterion, the sigma-plus theorems, the even-first-axis corollary) are
hypotheses under test: sweeps evaluate them next to ground truth and
flag any disagreement.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

from . import gf2
from .game import (GameSpec, GridShape, adjacency_matrix, is_sigma_plus,
                   parse_game, u_element)
from .gf2 import BitMatrix, BitVector
from .poly2 import two_valuation
from .symmetry import symmetric_basis

DEFAULT_ORACLE_CAP = 20
ORACLE_CAP_ENV = "SIGMA_FORGE_ORACLE_CAP"


@dataclass
class AchievabilityReport:
    game: GameSpec
    target_kind: str
    target: Optional[BitVector]
    achievable: bool
    witness: Optional[BitVector]
    certificate: Optional[BitVector]


@dataclass
class PredicateVerdict:
    shape: GridShape
    game: str
    closed_form: Optional[bool]
    ground_truth: bool
    agree: Optional[bool]


def all_on(shape: GridShape) -> BitVector:
    return BitVector.ones(shape.total)


def achievable(g: GameSpec, target: BitVector,
               target_kind: str = "explicit") -> AchievabilityReport:
    """Decide target in Im M; attach a witness or a certificate.

    For the symmetric game matrices the failure certificate is a kernel
    vector not orthogonal to the target, which proves unachievability;
    the orthogonality decision and the solver agree (tested) and share
    one elimination here.
    """
    m = adjacency_matrix(g)
    if target.n != m.rows:
        raise ValueError(f"target length {target.n} != grid size {m.rows}")
    x, cert = gf2.solve_with_certificate(m, target)
    if m.symmetric and x is None and cert is None:
        raise AssertionError("infeasible symmetric system without a kernel certificate")
    return AchievabilityReport(g, target_kind, target, x is not None,
                               witness=x, certificate=cert)


def symmetric_achievability(g: GameSpec) -> AchievabilityReport:
    """Whether every completely symmetric configuration is achievable.

    Equivalent, by kernel orthogonality, to every orbit-indicator basis
    vector lying in Im M.  On failure the report carries the first
    failing basis vector as target and a kernel certificate for it.
    """
    m = adjacency_matrix(g)
    kernel = gf2.kernel_basis(m)
    basis = symmetric_basis(g.shape).basis
    if kernel:
        kmat = BitMatrix.from_rows(kernel, cols=m.cols)
        for w in basis:
            hits = kmat.mul_vec(w)
            if not hits.is_zero():
                bad = next(i for i in range(hits.n) if hits[i])
                return AchievabilityReport(g, "symmetric-subspace", w, False,
                                           witness=None, certificate=kernel[bad])
    return AchievabilityReport(g, "symmetric-subspace", None, True,
                               witness=None, certificate=None)


def _principal_closed_form(g: GameSpec) -> bool:
    """The 2-d criterion: achievable unless n, m odd, u(0,0) = 0 and
    the 2-valuations of n+1 and m+1 coincide."""
    n, m = g.shape.dims
    u00 = u_element(g).constant_coefficient()
    blocked = (n % 2 == 1 and m % 2 == 1 and u00 == 0
               and two_valuation(n + 1) == two_valuation(m + 1))
    return not blocked


def principal_predicate(g: GameSpec) -> PredicateVerdict:
    """Closed form versus linear-algebra ground truth on an n x m grid.

    The partial-derivative hypothesis of the underlying theorem is not
    checked mechanically; for the four presets it is known to hold (or
    the sigma-plus theorem covers the verdict outright).
    """
    if g.shape.d != 2:
        raise ValueError(f"the 2-d predicate needs a 2-d grid, got {g.shape}")
    closed = _principal_closed_form(g)
    ground = symmetric_achievability(g).achievable
    return PredicateVerdict(g.shape, g.label(), closed, ground, closed == ground)


def _corollary_applies(g: GameSpec) -> bool:
    """Even-first-axis criterion for sigma-minus games, up to an axis
    permutation: some reordering has an even first axis, contains the
    first unit tuple, and every other term sets some later exponent
    to 1."""
    d = g.shape.d
    unit0 = tuple(1 if i == 0 else 0 for i in range(d))
    for perm in itertools.permutations(range(d)):
        if g.shape.dims[perm[0]] % 2:
            continue
        terms = {tuple(t[p] for p in perm) for t in g.terms}
        if unit0 not in terms:
            continue
        if all(any(t[j] == 1 for j in range(1, d)) for t in terms if t != unit0):
            return True
    return False


def closed_form_value(g: GameSpec) -> Optional[bool]:
    """The strongest applicable closed-form verdict, or None when the
    theory leaves the instance open (sigma-minus, d >= 3, all axes odd
    or irregular terms)."""
    if is_sigma_plus(g):
        return True
    if g.shape.d == 2:
        return _principal_closed_form(g)
    if g.shape.d == 1:
        lifted = GameSpec(GridShape((1,) + g.shape.dims),
                          frozenset((0,) + t for t in g.terms))
        return _principal_closed_form(lifted)
    if _corollary_applies(g):
        return True
    return None


def sutner_check(g: GameSpec) -> bool:
    """All-on achievability for a sigma-plus game (always true)."""
    if not is_sigma_plus(g):
        raise ValueError("sutner_check needs a sigma-plus game (all-ones diagonal)")
    return achievable(g, all_on(g.shape), "all-on").achievable


def _oracle_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(ORACLE_CAP_ENV)
    return int(env) if env else DEFAULT_ORACLE_CAP


def _push_columns(g: GameSpec) -> list:
    m = adjacency_matrix(g)
    cols = m if m.symmetric else m.transpose()
    return cols.row_ints()


def brute_force_oracle(g: GameSpec, target: BitVector,
                       cap: Optional[int] = None) -> bool:
    """Exhaustive search over all push subsets, Gray-code order."""
    total = g.shape.total
    limit = _oracle_cap(cap)
    if total > limit:
        raise ValueError(f"shape {g.shape} too large for brute force "
                         f"(total {total} > cap {limit})")
    if target.n != total:
        raise ValueError(f"target length {target.n} != grid size {total}")
    t = target.to_int()
    if t == 0:
        return True
    cols = _push_columns(g)
    cur = 0
    for s in range(1, 1 << total):
        cur ^= cols[(s & -s).bit_length() - 1]
        if cur == t:
            return True
    return False


def brute_force_image(g: GameSpec, cap: Optional[int] = None) -> frozenset:
    """All reachable configurations (as ints), by the same enumeration."""
    total = g.shape.total
    limit = _oracle_cap(cap)
    if total > limit:
        raise ValueError(f"shape {g.shape} too large for brute force "
                         f"(total {total} > cap {limit})")
    cols = _push_columns(g)
    seen = {0}
    cur = 0
    for s in range(1, 1 << total):
        cur ^= cols[(s & -s).bit_length() - 1]
        seen.add(cur)
    return frozenset(seen)


def _shape_range(d: int, max_n: int, odd_only: bool) -> Iterable[tuple]:
    axis = range(1, max_n + 1, 2) if odd_only else range(1, max_n + 1)
    return itertools.product(axis, repeat=d)


def _sweep_one(task) -> PredicateVerdict:
    game_text, dims = task
    g = parse_game(game_text, GridShape(dims))
    ground = symmetric_achievability(g).achievable
    closed = closed_form_value(g)
    agree = None if closed is None else closed == ground
    return PredicateVerdict(g.shape, game_text, closed, ground, agree)


def sweep(game: str, d: int, max_n: int, odd_only: bool = False,
          jobs: int = 1) -> List[PredicateVerdict]:
    """Evaluate closed form against ground truth over a shape range.

    Shapes run in lexicographic order; with jobs > 1 the shapes are
    evaluated in parallel and the row order is restored, so output is
    byte-identical to a sequential run.
    """
    tasks = [(game, dims) for dims in _shape_range(d, max_n, odd_only)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_sweep_one, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_sweep_one(t) for t in tasks]


def sweep_disagreements(rows: Sequence[PredicateVerdict]) -> List[PredicateVerdict]:
    return [r for r in rows if r.agree is False]


def _fmt_opt(b: Optional[bool]) -> str:
    return "" if b is None else str(int(b))


def sweep_csv(rows: Sequence[PredicateVerdict]) -> str:
    """CSV report: header shape,game,closed_form,ground_truth,agree."""
    lines = ["shape,game,closed_form,ground_truth,agree"]
    for r in rows:
        lines.append(f"{r.shape},{r.game},{_fmt_opt(r.closed_form)},"
                     f"{int(r.ground_truth)},{_fmt_opt(r.agree)}")
    return "\n".join(lines) + "\n"
