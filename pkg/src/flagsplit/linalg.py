"""Exact fields (QQ and GF(p)) and dense row reduction over them.

Elements of ``QQ`` are :class:`fractions.Fraction`; elements of ``GF(p)`` are
plain ints in ``range(p)``.  Every routine here takes the field as an explicit
argument so the same code serves the rational model and its mod-p reductions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence


class Field:
    characteristic: int

    def __call__(self, x):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def neg(self, a):
        return self.sub(self.zero, a)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)


class RationalField(Field):
    characteristic = 0

    def __call__(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.p = p

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} not invertible mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 mod {self.p}")
        return pow(a, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_for(p: int) -> Field:
    """``QQ`` for ``p == 0``, otherwise ``GF(p)``."""
    return QQ if p == 0 else GF(p)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- matrices are lists of rows ------------------------------------------------


def rref(rows: Sequence[Sequence], F: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[F(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not F.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and not F.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], F: Field) -> int:
    return len(rref(rows, F)[1])


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], F: Field) -> list[list]:
    if not a:
        return []
    bt = transpose(b) if b else []
    if not bt:
        return [[] for _ in a]
    out = []
    for row in a:
        out.append([_dot(row, col, F) for col in bt])
    return out


def matvec(a: Sequence[Sequence], v: Sequence, F: Field) -> list:
    return [_dot(row, v, F) for row in a]


def _dot(u, v, F: Field):
    acc = F.zero
    for x, y in zip(u, v):
        if x and y:
            acc = F.add(acc, F.mul(x, y))
    return acc


def identity(n: int, F: Field) -> list[list]:
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def zeros(nrows: int, ncols: int, F: Field) -> list[list]:
    return [[F.zero] * ncols for _ in range(nrows)]


def matadd(a, b, F: Field):
    return [[F.add(x, y) for x, y in zip(r, s)] for r, s in zip(a, b)]


def matscale(c, a, F: Field):
    return [[F.mul(c, x) for x in r] for r in a]


def convert(m, F: Field):
    return [[F(x) for x in r] for r in m]


def determinant(m: Sequence[Sequence], F: Field):
    n = len(m)
    a = [[F(x) for x in r] for r in m]
    det = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if not F.is_zero(a[i][c])), None)
        if piv is None:
            return F.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = F.neg(det)
        det = F.mul(det, a[c][c])
        inv = F.inv(a[c][c])
        for i in range(c + 1, n):
            if not F.is_zero(a[i][c]):
                f = F.mul(a[i][c], inv)
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[c])]
    return det


def inverse(m: Sequence[Sequence], F: Field) -> list[list]:
    n = len(m)
    aug = [list(r) + e for r, e in zip(convert(m, F), identity(n, F))]
    red, piv = rref(aug, F)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def solve_columns(a: Sequence[Sequence], b: Sequence, F: Field) -> list:
    """Solve ``a x = b`` for a matrix with independent columns; raises if inconsistent."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [[F(x) for x in a[i]] + [F(b[i])] for i in range(nrows)]
    red, piv = rref(aug, F)
    if ncols in piv:
        raise ValueError("inconsistent linear system")
    if len(piv) != ncols:
        raise ValueError("columns are dependent")
    x = [F.zero] * ncols
    for row, c in zip(red, piv):
        x[c] = row[-1]
    return x


def row_space_basis(vectors: Sequence[Sequence], F: Field) -> list[list]:
    return rref(vectors, F)[0]


def same_span(u: Sequence[Sequence], v: Sequence[Sequence], F: Field) -> bool:
    """Whether two lists of vectors span the same subspace."""
    ru, rv = row_space_basis(u, F), row_space_basis(v, F)
    return ru == rv
