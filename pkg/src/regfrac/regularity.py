"""Deciding whether a strength-2 orthogonal array hides a regular fraction.

For factors (i, j, k) of a strength-2 array where X_k is a function of
(X_i, X_j), the s x s table C[a][b] = x_k is a Latin square.  The three
factors support a generating equation, possibly after per-factor level
permutations, exactly when some relabeling of X_k makes every 2 x 2 minor
of the root-of-unity-valued table vanish; additively,

    C[a][b] + C[a'][b'] = C[a][b'] + C[a'][b]  (mod s).

Affine relabelings e -> [h*e + k] never change that criterion, so only the
(s-2)! coset representatives need checking on X_k.  A rank-1 square splits
as C[a][b] = c0 + r(a) + col(b) with r(0) = col(0) = 0, read off from the
column and row whose leading entry is 0.  Each readout map factors as
h * rep with rep fixing 0 and 1: the affine slope h is absorbed into the
equation's exponent, the residual rep is applied to the factor, and the
equation becomes X_i^{h_i} X_j^{h_j} X_k^{s-1} = w_{[-c0]} in the permuted
coordinates; monomial readouts therefore need no actual permutation.

Equations over q >= 4 factors are found layer by layer: fixing the levels
of the q-3 trailing factors must give rank-1 squares with identical row
and column increments throughout, and the corner constants must split into
one bijection of Z_s per trailing factor.

Factors whose permutation an earlier accepted equation already fixed may
not be re-permuted; for them the readout maps must come out linear
(e -> [h*e]) so that only the exponent absorbs them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .design import (
    DefiningEquation,
    Design,
    full_factorial,
    project,
    regular_fraction,
    strength_combinatorial,
)
from .linalg import in_row_space, row_reduce
from .permutation import LevelPerm, apply_level_perm, coset_representatives, monomial_decompose


class StrengthError(ValueError):
    """Raised when an operation requires an orthogonal array of strength 2."""


@dataclass(frozen=True)
class LatinSquare:
    """An s x s table of levels in which every row and column is a bijection."""

    s: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        s = self.s
        if len(self.rows) != s or any(len(r) != s for r in self.rows):
            raise ValueError(f"expected an {s} x {s} table")
        full = set(range(s))
        for r in self.rows:
            if set(r) != full:
                raise ValueError(f"row {r} is not a permutation of 0..{s - 1}")
        for b in range(s):
            if {r[b] for r in self.rows} != full:
                raise ValueError(f"column {b} is not a permutation of 0..{s - 1}")

    def permute_values(self, perm: LevelPerm) -> "LatinSquare":
        return LatinSquare(self.s, tuple(tuple(perm.image[v] for v in r) for r in self.rows))


def table_rank_one(rows: Sequence[Sequence[int]], s: int) -> bool:
    """Additive 2x2-minor criterion on an arbitrary square table of levels.

    All minors vanish over the complex coding iff every row differs from the
    first by a constant, since w_p w_q - w_r w_t = 0 iff [p+q] = [r+t].
    """
    r0 = rows[0]
    for a in range(1, len(rows)):
        ra = rows[a]
        d = (ra[0] - r0[0]) % s
        for b in range(1, len(r0)):
            if (ra[b] - r0[b]) % s != d:
                return False
    return True


def first_failing_minor(rows: Sequence[Sequence[int]], s: int):
    """First (a, a', b, b') whose minor is nonzero, with the two exponent sums.

    Returns ((a, a'), (b, b'), (diag, anti)) where diag = rows[a][b] +
    rows[a'][b'] and anti = rows[a][b'] + rows[a'][b] mod s, or None.
    """
    n = len(rows)
    for a, a2 in itertools.combinations(range(n), 2):
        for b, b2 in itertools.combinations(range(len(rows[0])), 2):
            diag = (rows[a][b] + rows[a2][b2]) % s
            anti = (rows[a][b2] + rows[a2][b]) % s
            if diag != anti:
                return (a, a2), (b, b2), (diag, anti)
    return None


def rank_one_check(square: LatinSquare) -> bool:
    return table_rank_one(square.rows, square.s)


def latin_square(design: Design, i: int, j: int, k: int) -> LatinSquare | None:
    """The table X_k(X_i, X_j), or None when X_k is not a function of (X_i, X_j).

    Requires the (i, j) projection to be a uniformly replicated full
    factorial (strength 2 on that pair).
    """
    s = design.s
    if len({i, j, k}) != 3:
        raise ValueError(f"factors ({i}, {j}, {k}) must be distinct")
    for f in (i, j, k):
        if not 1 <= f <= design.m:
            raise ValueError(f"factor {f} out of range 1..{design.m}")
    pair = project(design, (i, j))
    if len(pair) != s * s or len(set(pair.values())) != 1:
        raise StrengthError(f"projection onto factors ({i}, {j}) is not uniform")
    table = [[None] * s for _ in range(s)]
    for row in design.rows:
        a, b, v = row[i - 1], row[j - 1], row[k - 1]
        if table[a][b] is None:
            table[a][b] = v
        elif table[a][b] != v:
            return None
    return LatinSquare(s, tuple(tuple(r) for r in table))


def reduce_and_read(square: LatinSquare) -> tuple[LevelPerm, LevelPerm, int]:
    """Row/column rearrangements putting a rank-1 square in reduced form.

    Returns (pi_row, pi_col, constant) such that
    rows[pi_row(a)][pi_col(b)] = [a + b + constant]; the permutations are
    the inverses of the column and row whose leading entry is 0, and the
    constant is the upper-left entry.
    """
    s, rows = square.s, square.rows
    if not table_rank_one(rows, s):
        raise ValueError("square is not rank 1; nothing to read")
    c0 = rows[0][0]
    b0 = rows[0].index(0)
    col = tuple(rows[a][b0] for a in range(s))
    a0 = next(a for a in range(s) if rows[a][0] == 0)
    row = rows[a0]
    pi_row = LevelPerm(s, col).inverse()
    pi_col = LevelPerm(s, row).inverse()
    for a in range(s):
        for b in range(s):
            if rows[pi_row.image[a]][pi_col.image[b]] != (a + b + c0) % s:
                raise AssertionError("rank-1 square failed reduced-form verification")
    return pi_row, pi_col, c0


def _split_readout(readout: Sequence[int], s: int) -> tuple[int, LevelPerm]:
    """Write a leading-zero readout map g as g(e) = [h * rep(e)], rep fixing 0 and 1.

    The affine part h moves into the equation's exponent, so factors whose
    relabeling is monomial need no actual permutation; the residual rep is
    the canonical coset representative.
    """
    perm = LevelPerm(s, tuple(readout))
    h, _, rep = monomial_decompose(perm)
    return h, rep


def find_triple_equation(
    design: Design,
    factors: tuple[int, int, int],
    committed: Iterable[int] = (),
):
    """Search for a generating equation on (i, j, k) with X_k dependent.

    Iterates the affine-coset representatives on X_k (identity only when
    X_k is committed); the first one whose square is rank 1 and whose
    readouts respect the committed factors wins.  Returns
    (perms, DefiningEquation) with ``perms`` mapping free factors to the
    non-monomial residue of their readout; applying them to the design
    makes X^alpha = w_c hold.  None when X_k is not a function of
    (X_i, X_j) or no representative succeeds.
    """
    i, j, k = factors
    committed = frozenset(committed)
    square = latin_square(design, i, j, k)
    if square is None:
        return None
    s, m = design.s, design.m
    reps = [LevelPerm.identity(s)] if k in committed else list(coset_representatives(s))
    for rep in reps:
        candidate = square if rep.is_identity else square.permute_values(rep)
        if not table_rank_one(candidate.rows, s):
            continue
        rows = candidate.rows
        c0 = rows[0][0]
        b0 = rows[0].index(0)
        r_map = tuple(rows[a][b0] for a in range(s))
        c_map = rows[next(a for a in range(s) if rows[a][0] == 0)]
        exponents = [0] * m
        perms: dict[int, LevelPerm] = {}
        ok = True
        for factor, readout in ((i, r_map), (j, c_map)):
            h, residual = _split_readout(readout, s)
            if factor in committed and not residual.is_identity:
                ok = False
                break
            exponents[factor - 1] = h
            if factor not in committed:
                perms[factor] = residual
        if not ok:
            continue
        exponents[k - 1] = s - 1
        if k not in committed:
            perms[k] = rep
        return perms, DefiningEquation(tuple(exponents), (-c0) % s)
    return None


def _layer_tables(design: Design, i: int, j: int, k: int, outers: tuple[int, ...]):
    """Tables X_k(X_i, X_j) for every level combination of the outer factors."""
    s = design.s
    tables: dict[tuple[int, ...], list[list[int | None]]] = {}
    for row in design.rows:
        z = tuple(row[t - 1] for t in outers)
        cell = tables.setdefault(z, [[None] * s for _ in range(s)])
        a, b, v = row[i - 1], row[j - 1], row[k - 1]
        if cell[a][b] is None:
            cell[a][b] = v
        elif cell[a][b] != v:
            return None
    if len(tables) != s ** len(outers):
        return None
    for cell in tables.values():
        if any(v is None for r in cell for v in r):
            return None
    return tables


def find_equation_multilayer(
    design: Design,
    factors: Sequence[int],
    fixed_perms: Mapping[int, LevelPerm] | None = None,
    known_supports: Iterable[frozenset[int]] = (),
):
    """Search for a q-factor equation (q >= 4) layer by layer.

    ``factors`` is ordered: (inner, inner, dependent, outer...).  Factors in
    ``fixed_perms`` are relabeled first and then may not be re-permuted.  A
    tuple containing the whole support of an already-found equation is
    skipped outright.  Returns (perms, DefiningEquation) over the free
    factors, stated for the design after both fixed and returned
    permutations, or None.
    """
    factors = tuple(factors)
    if len(factors) < 4:
        raise ValueError("multilayer search needs at least four factors")
    if len(set(factors)) != len(factors):
        raise ValueError(f"factors {factors} are not distinct")
    fset = set(factors)
    for support in known_supports:
        if set(support) <= fset:
            return None
    work = design
    fixed_perms = dict(fixed_perms or {})
    for f, p in fixed_perms.items():
        if not p.is_identity:
            work = apply_level_perm(work, f, p)
    return _multilayer_search(work, factors, frozenset(fixed_perms))


def _multilayer_search(design: Design, factors: tuple[int, ...], committed: frozenset[int]):
    s, m = design.s, design.m
    i, j, k = factors[0], factors[1], factors[2]
    outers = factors[3:]
    tables = _layer_tables(design, i, j, k, outers)
    if tables is None:
        return None
    reps = [LevelPerm.identity(s)] if k in committed else list(coset_representatives(s))
    zero = (0,) * len(outers)
    for rep in reps:
        layered = {
            z: [[rep.image[v] for v in r] for r in cell] for z, cell in tables.items()
        }
        base = layered[zero]
        if not table_rank_one(base, s):
            continue
        c0 = base[0][0]
        b0 = base[0].index(0)
        r_map = tuple(base[a][b0] for a in range(s))
        c_map = tuple(base[next(a for a in range(s) if base[a][0] == 0)])
        # every layer must share the base increments, differing by a constant
        consistent = True
        corners = {}
        for z, cell in layered.items():
            delta = (cell[0][0] - base[0][0]) % s
            if any(
                (cell[a][b] - base[a][b]) % s != delta for a in range(s) for b in range(s)
            ):
                consistent = False
                break
            corners[z] = cell[0][0]
        if not consistent:
            continue
        # corner constants must split into one bijection per outer factor
        outer_maps = []
        for t in range(len(outers)):
            g = []
            for v in range(s):
                z = tuple(v if u == t else 0 for u in range(len(outers)))
                g.append((corners[z] - c0) % s)
            if sorted(g) != list(range(s)):
                consistent = False
                break
            outer_maps.append(tuple(g))
        if not consistent:
            continue
        for z, corner in corners.items():
            expect = (c0 + sum(outer_maps[t][z[t]] for t in range(len(outers)))) % s
            if corner != expect:
                consistent = False
                break
        if not consistent:
            continue
        exponents = [0] * m
        perms: dict[int, LevelPerm] = {}
        ok = True
        for factor, readout in ((i, r_map), (j, c_map), *zip(outers, outer_maps)):
            h, residual = _split_readout(readout, s)
            if factor in committed and not residual.is_identity:
                ok = False
                break
            exponents[factor - 1] = h
            if factor not in committed:
                perms[factor] = residual
        if not ok:
            continue
        exponents[k - 1] = s - 1
        if k not in committed:
            perms[k] = rep
        return perms, DefiningEquation(tuple(exponents), (-c0) % s)
    return None


@dataclass(frozen=True)
class RegularityReport:
    """Outcome of the regularity decision for one design."""

    regular: bool
    strength: int
    perms: tuple[LevelPerm, ...]
    equations: tuple[DefiningEquation, ...]
    tuples_examined: int

    def to_json(self) -> dict:
        return {
            "regular": self.regular,
            "strength": self.strength,
            "permutations": [list(p.image) for p in self.perms],
            "equations": [
                {"exponents": list(eq.exponents), "constant": eq.constant}
                for eq in self.equations
            ],
            "tuples_examined": self.tuples_examined,
        }


def _ordered_triples(m: int):
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(1, m + 1):
                if k != i and k != j:
                    yield (i, j, k)


def _role_orderings(combo: tuple[int, ...]):
    """One ordering per dependent-factor choice; inner/outer split is immaterial."""
    for k in combo:
        rest = [f for f in combo if f != k]
        yield (rest[0], rest[1], k, *rest[2:])


def verify_equations(
    design: Design, perms: Sequence[LevelPerm], equations: Sequence[DefiningEquation]
) -> bool:
    """True iff applying the perms maps the design onto the equations' fraction."""
    work = design
    for f, p in enumerate(perms, start=1):
        if not p.is_identity:
            work = apply_level_perm(work, f, p)
    if equations:
        target = regular_fraction(design.s, design.m, list(equations))
    else:
        target = full_factorial(design.s, design.m)
    return work.point_set() == target.point_set()


def regularity_check(design: Design) -> RegularityReport:
    """Decide regularity under level permutations, recovering the witnesses.

    Requires a strength-2 orthogonal array.  Triples are searched in
    lexicographic (i, j, k) order with k dependent, then larger tuples with
    support pruning; accepted equations fix their factors' permutations and
    must be linearly independent of the ones already found.  Scanning
    repeats until a full pass commits nothing; commits only ever restrict
    later readouts, so the repetition is cheap insurance against order
    effects and terminates after at most one empty pass.
    """
    s, m, n = design.s, design.m, design.n
    strength = strength_combinatorial(design)
    if strength < 2:
        raise StrengthError("not an orthogonal array of strength 2")

    examined = 0
    identity = LevelPerm.identity(s)

    total = s**m
    if total % n:
        return RegularityReport(False, strength, (identity,) * m, (), examined)
    ratio, r = total // n, 0
    while ratio % s == 0:
        ratio //= s
        r += 1
    if ratio != 1:
        return RegularityReport(False, strength, (identity,) * m, (), examined)
    if r == 0:
        return RegularityReport(True, strength, (identity,) * m, (), examined)

    work = design
    committed: dict[int, LevelPerm] = {}
    equations: list[DefiningEquation] = []
    basis: list[list[int]] = []

    def try_commit(found) -> bool:
        nonlocal work
        perms, eq = found
        if in_row_space(eq.exponents, basis, s):
            return False
        for f, p in perms.items():
            if not p.is_identity:
                work = apply_level_perm(work, f, p)
            committed[f] = p
        for f in range(1, m + 1):
            if eq.exponents[f - 1] and f not in committed:
                committed[f] = identity
        basis[:] = row_reduce(basis + [list(eq.exponents)], s)
        equations.append(eq)
        return True

    progress = True
    while progress and len(equations) < r:
        progress = False
        for triple in _ordered_triples(m):
            if len(equations) == r:
                break
            examined += 1
            found = find_triple_equation(work, triple, committed=committed)
            if found is not None and try_commit(found):
                progress = True
        for q in range(4, m + 1):
            if len(equations) == r:
                break
            supports = [frozenset(f for f in range(1, m + 1) if eq.exponents[f - 1]) for eq in equations]
            for combo in itertools.combinations(range(1, m + 1), q):
                if len(equations) == r:
                    break
                if any(sup <= set(combo) for sup in supports):
                    continue
                for ordering in _role_orderings(combo):
                    examined += 1
                    found = _multilayer_search(work, ordering, frozenset(committed))
                    if found is not None and try_commit(found):
                        progress = True
                        break

    if len(equations) < r:
        return RegularityReport(False, strength, (identity,) * m, (), examined)

    final_perms = tuple(committed.get(f, identity) for f in range(1, m + 1))
    report = RegularityReport(True, strength, final_perms, tuple(equations), examined)
    if not verify_equations(design, report.perms, report.equations):
        raise AssertionError("regularity witness failed verification")
    return report
