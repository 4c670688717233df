"""Exact linear algebra over the rationals, with a finite-field fast path.

All Betti-number computations in this package reduce to ranks and kernels of
sparse signed incidence matrices. Ranks are computed exactly with
arbitrary-precision rational arithmetic, so no tolerance tuning is ever
needed. An opt-in fast path computes ranks over GF(p) for the Mersenne prime
p = 2^31 - 1; a modular rank can only undershoot the rational rank for
integer matrices, so the fast path returns its answer only when it is
certified by hitting the dimension bound and falls back to rational
elimination otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

MERSENNE_PRIME_31 = 2**31 - 1

_fast_rank = False


def set_fast_rank(enabled: bool) -> None:
    """Globally enable or disable the certified GF(p) rank fast path."""
    global _fast_rank
    _fast_rank = bool(enabled)


def fast_rank_enabled() -> bool:
    return _fast_rank


class ExactMatrix:
    """Sparse matrix with exact rational entries.

    Entries are stored as a mapping (row, col) -> Fraction with zeros
    omitted. Instances are treated as immutable once constructed.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple, object] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry position ({i}, {j}) outside {rows}x{cols} matrix")
            q = Fraction(value)
            if q:
                clean[(i, j)] = q
        self.entries = clean

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[object]], cols: int | None = None) -> "ExactMatrix":
        nrows = len(data)
        ncols = cols if cols is not None else (len(data[0]) if data else 0)
        entries = {}
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, value in enumerate(row):
                if value:
                    entries[(i, j)] = Fraction(value)
        return cls(nrows, ncols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]], rows: int) -> "ExactMatrix":
        entries = {}
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("column of wrong length")
            for i, value in enumerate(col):
                if value:
                    entries[(i, j)] = Fraction(value)
        return cls(rows, len(columns), entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def row_dicts(self) -> list[dict[int, Fraction]]:
        rows: list[dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def column(self, j: int) -> dict[int, Fraction]:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def columns_as_vectors(self) -> list[tuple[Fraction, ...]]:
        dense = self.to_dense()
        return [tuple(dense[i][j] for i in range(self.rows)) for j in range(self.cols)]

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def apply(self, vector: Sequence[object]) -> tuple[Fraction, ...]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        vec = [Fraction(v) for v in vector]
        out = [Fraction(0)] * self.rows
        for (i, j), v in self.entries.items():
            if vec[j]:
                out[i] += v * vec[j]
        return tuple(out)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        by_row: dict[int, dict[int, Fraction]] = {}
        for (i, k), v in self.entries.items():
            by_row.setdefault(i, {})[k] = v
        other_rows: dict[int, dict[int, Fraction]] = {}
        for (k, j), w in other.entries.items():
            other_rows.setdefault(k, {})[j] = w
        entries: dict[tuple[int, int], Fraction] = {}
        for i, row in by_row.items():
            acc: dict[int, Fraction] = {}
            for k, v in row.items():
                for j, w in other_rows.get(k, {}).items():
                    acc[j] = acc.get(j, Fraction(0)) + v * w
            for j, s in acc.items():
                if s:
                    entries[(i, j)] = s
        return ExactMatrix(self.rows, other.cols, entries)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        entries = dict(self.entries)
        for (i, j), v in other.entries.items():
            entries[(i, j + self.cols)] = v
        return ExactMatrix(self.rows, self.cols + other.cols, entries)


@dataclass(frozen=True)
class RankProfile:
    rank: int
    nullity: int
    kernel_basis: Optional[tuple[tuple[Fraction, ...], ...]] = None


def _rref(
    rows: list[dict[int, Fraction]], ncols: int, pivot_limit: int | None = None
) -> tuple[list[dict[int, Fraction]], list[int], list[dict[int, Fraction]]]:
    """Reduced row echelon form of sparse rational rows.

    Pivot columns are chosen by a minimal-fill heuristic: among eligible
    columns with support in the active rows, pick the one with fewest
    nonzeros, then the sparsest row within it. Columns at or beyond
    `pivot_limit` are never pivoted (used for augmented right-hand sides).
    Returns the pivot rows (pivot normalized to 1, column cleared), the
    ordered pivot columns, and any residue rows whose support lies entirely
    beyond the pivot limit.
    """
    limit = ncols if pivot_limit is None else pivot_limit
    active = [dict(r) for r in rows if r]
    done: list[dict[int, Fraction]] = []
    pivot_cols: list[int] = []
    while True:
        col_count: dict[int, int] = {}
        for r in active:
            for j in r:
                if j < limit:
                    col_count[j] = col_count.get(j, 0) + 1
        if not col_count:
            break
        pivot_col = min(col_count, key=lambda j: (col_count[j], j))
        pivot_row = min(
            (r for r in active if pivot_col in r), key=lambda r: (len(r), min(r))
        )
        active.remove(pivot_row)
        inv = Fraction(1) / pivot_row[pivot_col]
        if inv != 1:
            pivot_row = {j: v * inv for j, v in pivot_row.items()}
        for bucket in (active, done):
            for idx, r in enumerate(bucket):
                factor = r.get(pivot_col)
                if factor is None:
                    continue
                new = dict(r)
                for j, v in pivot_row.items():
                    s = new.get(j, Fraction(0)) - factor * v
                    if s:
                        new[j] = s
                    else:
                        new.pop(j, None)
                bucket[idx] = new
        active = [r for r in active if r]
        done.append(pivot_row)
        pivot_cols.append(pivot_col)
    order = sorted(range(len(pivot_cols)), key=lambda idx: pivot_cols[idx])
    return [done[idx] for idx in order], sorted(pivot_cols), active


def rank(matrix: ExactMatrix, *, allow_modular: bool | None = None) -> int:
    """Rank over the rationals.

    With the fast path enabled, the GF(p) rank is computed first; it is
    returned only when it matches min(rows, cols), which certifies equality
    with the rational rank. Any other modular outcome falls back to exact
    rational elimination.
    """
    use_fast = _fast_rank if allow_modular is None else allow_modular
    if use_fast and matrix.entries:
        try:
            modular = rank_mod_p(matrix)
        except ValueError:
            modular = None  # denominator divisible by p; modular image undefined
        if modular == min(matrix.rows, matrix.cols):
            return modular
    _, pivots, _ = _rref(matrix.row_dicts(), matrix.cols)
    return len(pivots)


def rank_mod_p(matrix: ExactMatrix, p: int = MERSENNE_PRIME_31) -> int:
    """Rank of the matrix reduced mod p (entries with denominators coprime to p)."""
    rows: list[dict[int, int]] = [{} for _ in range(matrix.rows)]
    for (i, j), v in matrix.entries.items():
        num, den = v.numerator % p, v.denominator % p
        if den == 0:
            raise ValueError("denominator divisible by p")
        val = num * pow(den, p - 2, p) % p
        if val:
            rows[i][j] = val
    active = [r for r in rows if r]
    count = 0
    while active:
        pivot_row = min(active, key=len)
        active.remove(pivot_row)
        pivot_col = min(pivot_row)
        inv = pow(pivot_row[pivot_col], p - 2, p)
        pivot_row = {j: v * inv % p for j, v in pivot_row.items()}
        reduced = []
        for r in active:
            factor = r.get(pivot_col)
            if factor:
                new = dict(r)
                for j, v in pivot_row.items():
                    s = (new.get(j, 0) - factor * v) % p
                    if s:
                        new[j] = s
                    else:
                        new.pop(j, None)
                if new:
                    reduced.append(new)
            else:
                reduced.append(r)
        active = reduced
        count += 1
    return count


def kernel_basis(matrix: ExactMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space, one vector per free column."""
    reduced, pivots, _ = _rref(matrix.row_dicts(), matrix.cols)
    pivot_set = set(pivots)
    free_cols = [j for j in range(matrix.cols) if j not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [Fraction(0)] * matrix.cols
        vec[f] = Fraction(1)
        for row, pcol in zip(reduced, pivots):
            coeff = row.get(f)
            if coeff:
                vec[pcol] = -coeff
        basis.append(tuple(vec))
    return basis


def rank_profile(matrix: ExactMatrix, *, with_kernel: bool = True) -> RankProfile:
    reduced, pivots, _ = _rref(matrix.row_dicts(), matrix.cols)
    r = len(pivots)
    kern = None
    if with_kernel:
        pivot_set = set(pivots)
        kern_list = []
        for f in range(matrix.cols):
            if f in pivot_set:
                continue
            vec = [Fraction(0)] * matrix.cols
            vec[f] = Fraction(1)
            for row, pcol in zip(reduced, pivots):
                coeff = row.get(f)
                if coeff:
                    vec[pcol] = -coeff
            kern_list.append(tuple(vec))
        kern = tuple(kern_list)
    return RankProfile(rank=r, nullity=matrix.cols - r, kernel_basis=kern)


def solve_in_image(matrix: ExactMatrix, target: Sequence[object]) -> Optional[tuple[Fraction, ...]]:
    """Some x with matrix @ x = target, or None when target is outside the image.

    Free variables are set to zero, so the returned solution is deterministic.
    """
    if len(target) != matrix.rows:
        raise ValueError("target length does not match row count")
    aug_col = matrix.cols
    rows = matrix.row_dicts()
    for i, value in enumerate(target):
        q = Fraction(value)
        if q:
            rows[i][aug_col] = q
    reduced, pivots, residue = _rref(rows, aug_col + 1, pivot_limit=aug_col)
    if residue:
        return None
    x = [Fraction(0)] * matrix.cols
    for row, pcol in zip(reduced, pivots):
        x[pcol] = row.get(aug_col, Fraction(0))
    return tuple(x)


class IncrementalRank:
    """Grow an independent set of vectors one at a time.

    Used to pick homology representatives: feed boundary generators first,
    then keep exactly the cycle vectors that still increase the rank.
    """

    def __init__(self, length: int):
        self.length = length
        self._rows: list[dict[int, Fraction]] = []  # echelon rows, pivot first

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vector: Iterable[object]) -> bool:
        work = {i: Fraction(v) for i, v in enumerate(vector) if v}
        for row in self._rows:
            pivot = min(row)
            factor = work.get(pivot)
            if factor is None:
                continue
            for j, v in row.items():
                s = work.get(j, Fraction(0)) - factor * v
                if s:
                    work[j] = s
                else:
                    work.pop(j, None)
        if not work:
            return False
        pivot = min(work)
        inv = Fraction(1) / work[pivot]
        self._rows.append({j: v * inv for j, v in work.items()})
        return True
