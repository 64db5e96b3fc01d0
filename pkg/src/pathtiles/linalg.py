"""Ring-generic exact linear algebra.

Dense matrices over any commutative ring of int / Fraction / QtPolynomial
entries, with exact determinants, Pfaffians of skew-symmetric matrices, and
sums of maximum minors of rectangular matrices.  Determinants dispatch on the
entry types: fraction-free Bareiss elimination for numeric entries,
division-free column-subset dynamic programming for polynomial ones
(polynomial rings have no cheap exact division; target orders are small).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .ring import scalar_str, parse_scalar


class ExactMatrix:
    """Dense row-major matrix of exact ring elements."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._entries = entries

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), n, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def entry(self, i: int, j: int):
        return self._entries[i * self.cols + j]

    def __getitem__(self, key):
        i, j = key
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def submatrix(self, row_idx, col_idx) -> "ExactMatrix":
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        return ExactMatrix(
            len(row_idx),
            len(col_idx),
            [self.entry(i, j) for i in row_idx for j in col_idx],
        )

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("dimension mismatch in matrix product")
            out = []
            for i in range(self.rows):
                for j in range(other.cols):
                    acc = 0
                    for k in range(self.cols):
                        acc = acc + self.entry(i, k) * other.entry(k, j)
                    out.append(acc)
            return ExactMatrix(self.rows, other.cols, out)
        return ExactMatrix(self.rows, self.cols, [other * e for e in self._entries])

    def __rmul__(self, other):
        return ExactMatrix(self.rows, self.cols, [other * e for e in self._entries])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(a == b for a, b in zip(self._entries, other._entries))

    def __repr__(self):
        body = "; ".join(" ".join(scalar_str(x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"

    def to_lists(self) -> list[list[str]]:
        """JSON form: array of arrays of canonical scalar strings."""
        return [[scalar_str(x) for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_lists(cls, data) -> "ExactMatrix":
        return cls.from_rows([[parse_scalar(s) for s in row] for row in data])


def _is_numeric(entries) -> bool:
    return all(isinstance(e, (int, Fraction)) for e in entries)


def determinant(matrix: ExactMatrix):
    """Exact determinant over the commutative ring of the entries."""
    if matrix.rows != matrix.cols:
        raise ValueError(f"determinant of non-square {matrix.rows}x{matrix.cols} matrix")
    if matrix.rows == 0:
        return 1
    if _is_numeric(matrix._entries):
        return _det_bareiss(matrix)
    return _det_subset_dp(matrix)


def _det_bareiss(matrix: ExactMatrix):
    n = matrix.rows
    a = [[Fraction(x) for x in matrix.row(i)] for i in range(n)]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_subset_dp(matrix: ExactMatrix):
    # Laplace expansion organized over column subsets: O(2^n * n) ring ops.
    n = matrix.rows
    if n > 20:
        raise ValueError("division-free determinant limited to order <= 20")
    state = {0: 1}
    for r in range(n):
        nxt = {}
        for mask, value in state.items():
            cols = [j for j in range(n) if mask >> j & 1]
            for p, j in enumerate(_free_columns(mask, n)):
                term = value * matrix.entry(r, j)
                # Position of j within the enlarged, sorted subset.
                pos = sum(1 for c in cols if c < j)
                if (r + pos) % 2:
                    term = -term
                key = mask | (1 << j)
                nxt[key] = nxt.get(key, 0) + term
        state = nxt
    return state[(1 << n) - 1]


def _free_columns(mask: int, n: int):
    return [j for j in range(n) if not mask >> j & 1]


def is_skew_symmetric(matrix: ExactMatrix) -> bool:
    try:
        _require_skew(matrix)
    except ValueError:
        return False
    return True


def _require_skew(matrix: ExactMatrix) -> None:
    if matrix.rows != matrix.cols:
        raise ValueError("skew-symmetric matrix must be square")
    for i in range(matrix.rows):
        for j in range(i, matrix.cols):
            if matrix.entry(i, j) + matrix.entry(j, i) != 0:
                raise ValueError(
                    f"matrix is not skew-symmetric: entries ({i},{j}) and ({j},{i}) "
                    f"sum to {scalar_str(matrix.entry(i, j) + matrix.entry(j, i))}"
                )


def one_factors(n: int):
    """All perfect matchings of {0, ..., n-1} as tuples of (i, j) pairs, i < j."""
    if n % 2:
        raise ValueError("one_factors requires an even ground set")

    def rec(items):
        if not items:
            yield ()
            return
        first = items[0]
        for idx in range(1, len(items)):
            partner = items[idx]
            rest = items[1:idx] + items[idx + 1 :]
            for tail in rec(rest):
                yield ((first, partner),) + tail

    yield from rec(tuple(range(n)))


def crossing_number(pairs) -> int:
    """Number of crossing pairs: (i,j),(k,l) with i<k<j<l or k<i<l<j."""
    count = 0
    for (i, j), (k, l) in itertools.combinations(pairs, 2):
        if i < k < j < l or k < i < l < j:
            count += 1
    return count


def pfaffian(matrix: ExactMatrix):
    """Pfaffian of an even-order skew-symmetric matrix.

    Signed sum over perfect matchings for order <= 10 (<= 945 terms),
    first-row Laplace-style expansion above that.
    """
    _require_skew(matrix)
    if matrix.rows % 2:
        raise ValueError("Pfaffian requires even order")
    if matrix.rows <= 10:
        return pfaffian_by_matchings(matrix)
    return pfaffian_by_expansion(matrix)


def pfaffian_by_matchings(matrix: ExactMatrix):
    """Pfaffian as the crossing-number-signed sum over 1-factors."""
    _require_skew(matrix)
    n = matrix.rows
    if n % 2:
        raise ValueError("Pfaffian requires even order")
    if n == 0:
        return 1
    total = 0
    for pairing in one_factors(n):
        term = 1
        for i, j in pairing:
            term = term * matrix.entry(i, j)
        if crossing_number(pairing) % 2:
            term = -term
        total = total + term
    return total


def pfaffian_by_expansion(matrix: ExactMatrix):
    """Pfaffian by recursive expansion along the first row."""
    _require_skew(matrix)
    if matrix.rows % 2:
        raise ValueError("Pfaffian requires even order")

    def rec(idx: tuple[int, ...]):
        if not idx:
            return 1
        first = idx[0]
        total = 0
        for p in range(1, len(idx)):
            rest = idx[1:p] + idx[p + 1 :]
            term = matrix.entry(first, idx[p]) * rec(rest)
            if p % 2 == 0:
                term = -term
            total = total + term
        return total

    return rec(tuple(range(matrix.rows)))


def upper_twos(n: int) -> ExactMatrix:
    """Upper triangular matrix with 1 on the diagonal and 2 above it."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return ExactMatrix(
        n, n, [2 if i < j else (1 if i == j else 0) for i in range(n) for j in range(n)]
    )


def skew_ones(n: int) -> ExactMatrix:
    """Skew-symmetric matrix with 1 above the diagonal and -1 below it."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return ExactMatrix(
        n, n, [1 if i < j else (0 if i == j else -1) for i in range(n) for j in range(n)]
    )


def shift_entries(matrix: ExactMatrix, x) -> ExactMatrix:
    """Add x to every entry."""
    return ExactMatrix(matrix.rows, matrix.cols, [e + x for e in matrix._entries])


def sum_max_minors(matrix: ExactMatrix):
    """Sum of all maximal (rows x rows) minors of a wide matrix.

    Direct enumeration over column subsets; this is the oracle the Pfaffian
    and determinant routes are checked against.  An empty (0 x n) matrix has
    minor sum 1 by the empty-determinant convention.
    """
    m, n = matrix.rows, matrix.cols
    if m > n:
        raise ValueError("matrix must have rows <= cols")
    total = 0
    for cols in itertools.combinations(range(n), m):
        total = total + determinant(matrix.submatrix(range(m), cols))
    return total


def _bordered(matrix: ExactMatrix) -> ExactMatrix:
    """Add a leading row/column with a single 1 in the corner."""
    m, n = matrix.rows, matrix.cols
    out = []
    out.append([1] + [0] * n)
    for i in range(m):
        out.append([0] + matrix.row(i))
    return ExactMatrix.from_rows(out)


def sum_max_minors_pfaffian(matrix: ExactMatrix):
    """Maximal-minor sum evaluated through a Pfaffian.

    Even row count m: Pf[Z E Z^T] with E = skew_ones(n).  Odd m: border Z
    with a unit corner first, giving an order m+1 Pfaffian.
    """
    m, n = matrix.rows, matrix.cols
    if m < 1:
        raise ValueError("requires at least one row")
    if m > n:
        raise ValueError("matrix must have rows <= cols")
    if m % 2 == 0:
        z = matrix
        e = skew_ones(n)
    else:
        z = _bordered(matrix)
        e = skew_ones(n + 1)
    return pfaffian(z * e * z.transpose())


def sum_max_minors_squared(matrix: ExactMatrix):
    """The pair (det[Z U Z^T], det[Z U^T Z^T]); each equals the squared minor sum."""
    m, n = matrix.rows, matrix.cols
    if m > n:
        raise ValueError("matrix must have rows <= cols")
    u = upper_twos(n)
    zt = matrix.transpose()
    return determinant(matrix * u * zt), determinant(matrix * u.transpose() * zt)


def _block_skew(z: ExactMatrix, a: ExactMatrix, h: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Assemble [[Z A Z^T, H], [-H^T, B]]."""
    top_left = z * a * z.transpose()
    m = top_left.rows
    k = b.rows
    out = []
    for i in range(m):
        out.append(top_left.row(i) + h.row(i))
    ht = h.transpose()
    for i in range(k):
        out.append([-x for x in ht.row(i)] + b.row(i))
    return ExactMatrix.from_rows(out)


def skew_shift_block_invariant(z: ExactMatrix, a: ExactMatrix, h: ExactMatrix | None, b: ExactMatrix | None, x) -> bool:
    """Whether det[[Z A Z^T, H], [-H^T, B]] is unchanged by adding x to all of A.

    A and B must be skew-symmetric and the total order m + k even; with
    k = 0 this reduces to det[Z A Z^T] == det[Z A(x) Z^T].
    """
    _require_skew(a)
    if a.rows != z.cols:
        raise ValueError("A must be square of order matching Z's columns")
    if h is None:
        h = ExactMatrix.zero(z.rows, 0)
    if b is None:
        b = ExactMatrix.zero(0, 0)
    _require_skew(b)
    if h.rows != z.rows or h.cols != b.rows:
        raise ValueError("H must be (rows of Z) x (order of B)")
    if (z.rows + b.rows) % 2:
        raise ValueError("total block order must be even")
    lhs = determinant(_block_skew(z, a, h, b))
    rhs = determinant(_block_skew(z, shift_entries(a, x), h, b))
    return lhs == rhs


def random_integer_matrix(rng, rows: int, cols: int, low: int = -3, high: int = 3) -> ExactMatrix:
    return ExactMatrix(rows, cols, [rng.randint(low, high) for _ in range(rows * cols)])


def random_skew_matrix(rng, n: int, low: int = -4, high: int = 4) -> ExactMatrix:
    entries = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(low, high)
            entries[i][j] = v
            entries[j][i] = -v
    return ExactMatrix.from_rows(entries)
