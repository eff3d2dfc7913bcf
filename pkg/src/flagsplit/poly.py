"""Sparse multivariate polynomials with exact coefficients in a :class:`Field`."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .linalg import Field, QQ


class InexactDivision(ArithmeticError):
    pass


class Poly:
    """Polynomial in ``nvars`` variables, stored as ``{exponent tuple: coefficient}``."""

    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None, field: Field = QQ):
        self.nvars = nvars
        self.field = field
        clean = {}
        if terms:
            for e, c in terms.items():
                c = field(c)
                if not field.is_zero(c):
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms, field):
        p = cls.__new__(cls)
        p.nvars, p.field, p.terms = nvars, field, terms
        return p

    @classmethod
    def const(cls, nvars: int, c, field: Field = QQ) -> "Poly":
        return cls(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def var(cls, nvars: int, i: int, field: Field = QQ) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, field)

    @classmethod
    def linear(cls, coeffs: Sequence, field: Field = QQ) -> "Poly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms, field)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field or other.nvars != self.nvars:
                raise TypeError("polynomials live in different rings")
            return other
        return Poly.const(self.nvars, other, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, F.zero), c)
            if F.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return Poly._raw(self.nvars, out, F)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly._raw(self.nvars, {e: F.neg(c) for e, c in self.terms.items()}, F)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        F = self.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(out.get(e, F.zero), F.mul(c1, c2))
                if F.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return Poly._raw(self.nvars, out, F)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Poly":
        F = self.field
        c = F(c)
        if F.is_zero(c):
            return Poly(self.nvars, {}, F)
        return Poly._raw(self.nvars, {e: F.mul(c, v) for e, v in self.terms.items()}, F)

    def __pow__(self, k: int):
        out = Poly.const(self.nvars, 1, self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- structure -----------------------------------------------------------

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def degree(self) -> int:
        """Total polynomial degree (−1 for zero)."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d}, self.field)

    def coefficient(self, e: tuple):
        return self.terms.get(tuple(e), self.field.zero)

    def reduce(self, F: Field) -> "Poly":
        """Map coefficients into another field (e.g. QQ -> GF(p))."""
        return Poly(self.nvars, {e: F(c) for e, c in self.terms.items()}, F)

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Ring map sending variable ``i`` to ``images[i]``."""
        out = Poly(self.nvars, {}, self.field)
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = images[i] ** k
            return cache[key]

        for e, c in self.terms.items():
            term = Poly.const(images[0].nvars if images else self.nvars, c, self.field)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def derivative(self, i: int) -> "Poly":
        F = self.field
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = F.mul(F(e[i]), c)
        return Poly(self.nvars, out, F)

    def exact_div_linear(self, lin: "Poly") -> "Poly":
        """Divide by a linear form; raises :class:`InexactDivision` on a remainder."""
        F = self.field
        lead = max(lin.terms)  # lex-leading term: lowest-index variable
        k = lead.index(1)
        lc = lin.terms[lead]
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            e = max(rem)
            c = rem[e]
            if e[k] == 0:
                raise InexactDivision(f"{self} is not divisible by {lin}")
            qe = list(e)
            qe[k] -= 1
            qe = tuple(qe)
            qc = F.div(c, lc)
            quot[qe] = F.add(quot.get(qe, F.zero), qc)
            for le, lcoef in lin.terms.items():
                te = tuple(a + b for a, b in zip(qe, le))
                s = F.sub(rem.get(te, F.zero), F.mul(qc, lcoef))
                if F.is_zero(s):
                    rem.pop(te, None)
                else:
                    rem[te] = s
        return Poly(self.nvars, quot, F)

    def __repr__(self):
        return self.to_string()

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif self.field.characteristic == 0 and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of the given total degree, in decreasing lex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(sorted(out, reverse=True))


def elementary_symmetric(nvars: int, k: int, field: Field = QQ) -> Poly:
    terms = {}
    for idx in combinations(range(nvars), k):
        e = [0] * nvars
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return Poly(nvars, terms, field)


def poly_sum(polys: Iterable[Poly], nvars: int, field: Field = QQ) -> Poly:
    out = Poly(nvars, {}, field)
    for p in polys:
        out = out + p
    return out
