"""Coinvariant algebras H*(G/T) with their Schubert bases, products and Steenrod operations.

The rational model is the ground truth: Schubert representatives are built by
divided differences from a top-degree class, products and the Weyl action are
computed on representatives and expressed back in the Schubert basis, where
they are integral.  Mod-p data is the reduction of that integral data; the
Steenrod operation additionally needs the polynomial model mod p, which exists
away from the torsion primes (2 for G2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import linalg
from .linalg import QQ, Field, field_for
from .poly import InexactDivision, Poly, elementary_symmetric, monomials
from .rootweyl import RootDatum, WeylElement, WeylGroup, build_root_datum, enumerate_weyl

TORSION_PRIMES = {"C2": (), "G2": (2,)}


class ConsistencyError(RuntimeError):
    """An internal invariant failed (wrong convention, non-integral change of basis, ...)."""


# -- presentation and divided differences ---------------------------------------------


@dataclass(frozen=True)
class Presentation:
    num_vars: int
    generators: tuple[Poly, ...]  # over QQ, integral coefficients

    def over(self, F: Field) -> tuple[Poly, ...]:
        return tuple(g.reduce(F) for g in self.generators)


def presentation(datum: RootDatum) -> Presentation:
    """Ideal generators: A_{n}: e_1..e_{n+1}; C2: x1^2+x2^2, x1^2 x2^2; G2: e_1, e_2, e_3^2.

    For G2 the degree-3 generator gamma (with e_3 = 2 gamma, gamma^2 = 0) has been
    eliminated, which is valid once 2 is invertible.
    """
    n = datum.num_vars
    if datum.type_tag.startswith("A"):
        gens = [elementary_symmetric(n, k) for k in range(1, n + 1)]
    elif datum.type_tag == "C2":
        x1, x2 = Poly.var(2, 0), Poly.var(2, 1)
        gens = [x1 ** 2 + x2 ** 2, x1 ** 2 * x2 ** 2]
    else:
        e3 = elementary_symmetric(3, 3)
        gens = [elementary_symmetric(3, 1), elementary_symmetric(3, 2), e3 * e3]
    return Presentation(n, tuple(gens))


def reflection_images(datum: RootDatum, matrix, F: Field = QQ) -> list[Poly]:
    """Images of the variables under the Weyl element with the given matrix."""
    n = datum.num_vars
    return [Poly.linear([matrix[k][j] for k in range(n)], F) for j in range(n)]


def act_on_poly(datum: RootDatum, w: WeylElement, f: Poly) -> Poly:
    return f.substitute(reflection_images(datum, w.matrix, f.field))


def divided_difference(datum: RootDatum, i: int, f: Poly) -> Poly:
    """A_i(f) = (f - s_i f) / alpha_i for a 1-based generator index."""
    s = datum.reflections[i - 1]
    g = f - f.substitute(reflection_images(datum, s, f.field))
    if not g:
        return Poly(f.nvars, {}, f.field)
    alpha = Poly.linear(datum.simple_roots[i - 1], f.field)
    try:
        return g.exact_div_linear(alpha)
    except InexactDivision as exc:
        raise ConsistencyError(f"A_{i} not exact on {f}: reflection convention broken") from exc


def divided_difference_word(datum: RootDatum, word: str, f: Poly) -> Poly:
    """A_{i1} A_{i2} ... A_{ik} f for the word i1 i2 ... ik (rightmost applied first)."""
    for ch in reversed(word):
        f = divided_difference(datum, int(ch), f)
    return f


# -- graded quotient by linear algebra ---------------------------------------------


class GradedQuotient:
    """F[x] / I degree by degree: each slice of I is row reduced against the monomials of
    that degree; non-pivot monomials form the monomial section of the quotient."""

    def __init__(self, nvars: int, generators: Sequence[Poly], F: Field, top_degree: int):
        self.nvars = nvars
        self.generators = tuple(generators)
        self.field = F
        self.top_degree = top_degree
        self._slices: dict[int, tuple] = {}

    def _slice(self, d: int):
        if d not in self._slices:
            F = self.field
            mons = monomials(self.nvars, d)
            col = {m: i for i, m in enumerate(mons)}
            rows = []
            for g in self.generators:
                gd = g.degree()
                if gd > d or gd < 0:
                    continue
                for m in monomials(self.nvars, d - gd):
                    prod = g * Poly(self.nvars, {m: 1}, F)
                    row = [F.zero] * len(mons)
                    for e, c in prod.terms.items():
                        row[col[e]] = c
                    rows.append(row)
            red, piv = linalg.rref(rows, F) if rows else ([], [])
            pivset = set(piv)
            standard = [i for i in range(len(mons)) if i not in pivset]
            self._slices[d] = (mons, col, red, piv, standard)
        return self._slices[d]

    def dim(self, d: int) -> int:
        return len(self._slice(d)[4])

    def standard_monomials(self, d: int) -> list[tuple[int, ...]]:
        mons, _, _, _, std = self._slice(d)
        return [mons[i] for i in std]

    def normal_form(self, f: Poly, d: int | None = None) -> list:
        """Coordinates of a homogeneous ``f`` on the standard monomials of its degree."""
        F = self.field
        if d is None:
            d = f.degree()
            if d < 0:
                raise ValueError("degree of zero polynomial is ambiguous; pass d")
        if f and not f.is_homogeneous():
            raise ValueError("normal_form expects a homogeneous polynomial")
        mons, col, red, piv, std = self._slice(d)
        v = [F.zero] * len(mons)
        for e, c in f.terms.items():
            v[col[e]] = F(c)
        for row, c in zip(red, piv):
            if not F.is_zero(v[c]):
                f0 = v[c]
                v = [F.sub(a, F.mul(f0, b)) for a, b in zip(v, row)]
        return [v[i] for i in std]

    def lift(self, coords: Sequence, d: int) -> Poly:
        """Polynomial on the standard monomials with the given coordinates."""
        return Poly(self.nvars, dict(zip(self.standard_monomials(d), coords)), self.field)

    def is_zero(self, f: Poly) -> bool:
        f = f.reduce(self.field) if f.field != self.field else f
        for d in {sum(e) for e in f.terms}:
            if d > self.top_degree:
                continue
            if any(not self.field.is_zero(c) for c in self.normal_form(f.homogeneous_part(d), d)):
                return False
        return True


# -- the rational Schubert model ---------------------------------------------------


class SchubertModel:
    """Schubert representatives and change-of-basis data over QQ for one root datum."""

    def __init__(self, datum: RootDatum, W: WeylGroup | None = None):
        self.datum = datum
        self.W = W or enumerate_weyl(datum)
        self.N = self.W.max_length
        self.pres = presentation(datum)
        self.quotient = GradedQuotient(datum.num_vars, self.pres.generators, QQ, self.N)
        ranks = self.W.poincare_ranks()
        for d in range(self.N + 1):
            if self.quotient.dim(d) != ranks[d]:
                raise ConsistencyError(
                    f"{datum.type_tag}: quotient degree {d} has dim {self.quotient.dim(d)}, Bruhat rank {ranks[d]}"
                )
        self.f_top = self._solve_top()
        self.reps: dict[int, Poly] = self._representatives(self.f_top)
        self._check_second_top_solution()
        self.basis: list[list[WeylElement]] = [self.W.by_length(k) for k in range(self.N + 1)]
        self._schubert_matrix = {}
        self._schubert_inverse = {}
        for k in range(self.N + 1):
            cols = [self.quotient.normal_form(self.reps[w.index], k) for w in self.basis[k]]
            m = linalg.transpose(cols)
            try:
                inv = linalg.inverse(m, QQ)
            except ZeroDivisionError as exc:
                raise ConsistencyError(f"Schubert classes dependent in degree {k}") from exc
            self._schubert_matrix[k] = m
            self._schubert_inverse[k] = inv
        self._products: dict[tuple[int, int], dict[int, int]] = {}

    def _solve_top(self) -> Poly:
        w0 = self.W.w0.word
        nv = self.datum.num_vars
        values = []
        for m in monomials(nv, self.N):
            c = divided_difference_word(self.datum, w0, Poly(nv, {m: 1}))
            values.append((m, c.coefficient((0,) * nv)))
        nonzero = [(m, c) for m, c in values if c != 0]
        if not nonzero:
            raise ConsistencyError("no top-degree class with A_{w0} f = 1")
        m, c = nonzero[0]
        self._top_candidates = (nonzero, values)
        return Poly(nv, {m: Fraction(1) / c})

    def _representatives(self, f_top: Poly) -> dict[int, Poly]:
        W = self.W
        reps = {}
        for w in W:
            u = W.multiply(W.inverse(w), W.w0)
            reps[w.index] = divided_difference_word(self.datum, u.word, f_top)
        return reps

    def _check_second_top_solution(self):
        nonzero, values = self._top_candidates
        m0, c0 = nonzero[0]
        m1, c1 = values[-1] if values[-1][0] != m0 else values[0]
        nv = self.datum.num_vars
        # f_top + (m1 - (c1/c0) m0) also satisfies A_{w0} f = 1
        alt = self.f_top + Poly(nv, {m1: 1}) - Poly(nv, {m0: Fraction(c1) / c0})
        reps2 = self._representatives(alt)
        for idx, r in self.reps.items():
            if not self.quotient.is_zero(r - reps2[idx]):
                raise ConsistencyError("Schubert classes depend on the choice of top class")

    # -- conversions ---------------------------------------------------------

    def to_schubert(self, f: Poly, k: int) -> list[Fraction]:
        """Schubert coordinates (ordered like ``basis[k]``) of a homogeneous degree-k polynomial."""
        if k > self.N:
            return []
        nf = self.quotient.normal_form(f, k)
        return linalg.matvec(self._schubert_inverse[k], nf, QQ)

    def schubert_matrix(self, k: int):
        return self._schubert_matrix[k]

    def integral_witness(self, k: int) -> tuple[bool, Fraction]:
        """Whether the Schubert/monomial change of basis in degree k is integral and unimodular."""
        m = self._schubert_matrix[k]
        integral = all(Fraction(x).denominator == 1 for r in m for x in r)
        det = linalg.determinant(m, QQ)
        return integral and abs(det) == 1, det

    # -- products ------------------------------------------------------------

    def product(self, u: WeylElement, v: WeylElement) -> dict[int, int]:
        """sigma_u sigma_v as {element index: integer coefficient}."""
        key = (min(u.index, v.index), max(u.index, v.index))
        if key not in self._products:
            k = u.length + v.length
            out: dict[int, int] = {}
            if k <= self.N:
                coords = self.to_schubert(self.reps[u.index] * self.reps[v.index], k)
                for w, c in zip(self.basis[k], coords):
                    if c.denominator != 1:
                        raise ConsistencyError(f"non-integral structure constant {c}")
                    if c:
                        out[w.index] = int(c)
            self._products[key] = out
        return self._products[key]

    # -- Weyl action ---------------------------------------------------------

    @cached_property
    def generator_action(self) -> list[list[list[list[int]]]]:
        """For each generator s_i and degree k, the integer matrix of f -> s_i f."""
        out = []
        for i in range(1, self.datum.rank + 1):
            s = self.W.generator(i)
            per_degree = []
            for k in range(self.N + 1):
                cols = [self.to_schubert(act_on_poly(self.datum, s, self.reps[w.index]), k) for w in self.basis[k]]
                m = linalg.transpose(cols)
                for row in m:
                    for x in row:
                        if x.denominator != 1:
                            raise ConsistencyError(f"non-integral Weyl action entry {x}")
                per_degree.append([[int(x) for x in row] for row in m])
            out.append(per_degree)
        return out


_MODELS: dict[tuple, SchubertModel] = {}


def schubert_model(type_tag: str, labeling=None) -> SchubertModel:
    datum = build_root_datum(type_tag, labeling)
    key = (datum.type_tag, datum.labeling)
    if key not in _MODELS:
        _MODELS[key] = SchubertModel(datum)
    return _MODELS[key]


# -- cohomology with coefficients ----------------------------------------------------


class CohomologyClass:
    """Element of H*(G/T; F) in Schubert coordinates (possibly inhomogeneous)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "CoinvariantAlgebra", coeffs: Mapping[int, object] | None = None):
        F = ring.field
        self.ring = ring
        clean = {}
        for idx, c in (coeffs or {}).items():
            c = F(c)
            if not F.is_zero(c):
                clean[idx] = c
        self.coeffs = clean

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        F = self.ring.field
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = F.add(out.get(i, F.zero), c)
        return CohomologyClass(self.ring, out)

    def __neg__(self):
        F = self.ring.field
        return CohomologyClass(self.ring, {i: F.neg(c) for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar) -> "CohomologyClass":
        F = self.ring.field
        s = F(scalar)
        return CohomologyClass(self.ring, {i: F.mul(s, c) for i, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, CohomologyClass):
            return self.ring.multiply(self, other)
        return other * self

    def __eq__(self, other):
        return isinstance(other, CohomologyClass) and self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, w: WeylElement | str):
        if isinstance(w, str):
            w = self.ring.W.parse_word(w)
        return self.coeffs.get(w.index, self.ring.field.zero)

    def degrees(self) -> list[int]:
        """Half-degrees (Weyl lengths) present."""
        return sorted({self.ring.W[i].length for i in self.coeffs})

    def homogeneous(self, k: int) -> "CohomologyClass":
        return CohomologyClass(self.ring, {i: c for i, c in self.coeffs.items() if self.ring.W[i].length == k})

    def vector(self, k: int) -> list:
        F = self.ring.field
        return [self.coeffs.get(w.index, F.zero) for w in self.ring.basis[k]]

    def __str__(self):
        return format_class(self)

    __repr__ = __str__


def format_class(c: CohomologyClass) -> str:
    if not c.coeffs:
        return "0"
    W = c.ring.W
    parts = []
    for idx in sorted(c.coeffs, key=lambda i: (W[i].length, W[i].word)):
        coef = c.coeffs[idx]
        name = f"s[{W[idx]}]"
        if coef == 1:
            parts.append(name)
        else:
            parts.append(f"{coef}*{name}")
    return " + ".join(parts).replace("+ -", "- ")


class SteenrodUnknown(LookupError):
    """The requested Steenrod value is not available (flagged, never silently zero)."""


class CoinvariantAlgebra:
    """H*(G/T; F) for F = QQ or GF(p), in the Schubert basis.

    Products and the Weyl action come from the integral rational model.  Over
    GF(p) with p not a torsion prime the polynomial model mod p is built as
    well (graded quotient of GF(p)[x]) and used for the Steenrod operation.
    """

    def __init__(self, model: SchubertModel, p: int = 0):
        self.model = model
        self.datum = model.datum
        self.W = model.W
        self.p = p
        self.field = field_for(p)
        self.N = model.N
        self.basis = model.basis
        self.polynomial_model = p == 0 or p not in TORSION_PRIMES.get(self.datum.type_tag, ())
        self.quotient: GradedQuotient | None = None
        self.reps: dict[int, Poly] = {}
        self._to_schubert_inv = {}
        if p and self.polynomial_model:
            self._build_mod_p_model()

    def _build_mod_p_model(self):
        F = self.field
        q = GradedQuotient(self.datum.num_vars, self.model.pres.over(F), F, self.N)
        ranks = self.W.poincare_ranks()
        for d in range(self.N + 1):
            if q.dim(d) != ranks[d]:
                raise ConsistencyError(f"mod {self.p} quotient degree {d} has dim {q.dim(d)} != {ranks[d]}")
        self.quotient = q
        try:
            self.reps = {i: r.reduce(F) for i, r in self.model.reps.items()}
        except ZeroDivisionError as exc:
            raise ConsistencyError(f"Schubert representatives not defined mod {self.p}") from exc
        for k in range(self.N + 1):
            cols = [q.normal_form(self.reps[w.index], k) for w in self.basis[k]]
            try:
                self._to_schubert_inv[k] = linalg.inverse(linalg.transpose(cols), F)
            except ZeroDivisionError as exc:
                raise ConsistencyError(f"Schubert classes dependent mod {self.p} in degree {k}") from exc

    # -- construction of classes ----------------------------------------------

    def sigma(self, word: str | WeylElement) -> CohomologyClass:
        w = self.W.parse_word(word) if isinstance(word, str) else word
        return CohomologyClass(self, {w.index: 1})

    @property
    def one(self) -> CohomologyClass:
        return self.sigma("")

    def zero(self) -> CohomologyClass:
        return CohomologyClass(self)

    def from_vector(self, k: int, vec: Sequence) -> CohomologyClass:
        return CohomologyClass(self, {w.index: c for w, c in zip(self.basis[k], vec)})

    def parse_class(self, text: str) -> CohomologyClass:
        """Parse ``2*s[121] + s[212] - s[e]`` style sums."""
        from .groupring import _parse_linear_combination

        terms = _parse_linear_combination(text, self.W)
        out = self.zero()
        for w, c in terms:
            out = out + CohomologyClass(self, {w.index: self.field(c)})
        return out

    def dim(self, k: int) -> int:
        return len(self.basis[k]) if 0 <= k <= self.N else 0

    # -- ring structure --------------------------------------------------------

    def multiply(self, a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
        F = self.field
        out: dict[int, object] = {}
        for i, ca in a.coeffs.items():
            for j, cb in b.coeffs.items():
                cab = F.mul(ca, cb)
                for k, c in self.model.product(self.W[i], self.W[j]).items():
                    out[k] = F.add(out.get(k, F.zero), F.mul(cab, F(c)))
        return CohomologyClass(self, out)

    def power(self, a: CohomologyClass, n: int) -> CohomologyClass:
        out = self.one
        for _ in range(n):
            out = self.multiply(out, a)
        return out

    # -- polynomial model mod p ------------------------------------------------

    def class_of_poly(self, f: Poly) -> CohomologyClass:
        """Schubert expansion of a polynomial (any degree mix)."""
        F = self.field
        if self.p == 0:
            out = {}
            for d in sorted({sum(e) for e in f.terms}):
                if d > self.N:
                    continue
                coords = self.model.to_schubert(f.homogeneous_part(d), d)
                out.update({w.index: c for w, c in zip(self.basis[d], coords)})
            return CohomologyClass(self, out)
        if self.quotient is None:
            raise ConsistencyError(f"no polynomial model for {self.datum.type_tag} mod {self.p}")
        f = f.reduce(F) if f.field != F else f
        out = {}
        for d in sorted({sum(e) for e in f.terms}):
            if d > self.N:
                continue
            nf = self.quotient.normal_form(f.homogeneous_part(d), d)
            coords = linalg.matvec(self._to_schubert_inv[d], nf, F)
            out.update({w.index: c for w, c in zip(self.basis[d], coords)})
        return CohomologyClass(self, out)

    def representative(self, c: CohomologyClass) -> Poly:
        reps = self.reps if self.p else self.model.reps
        F = self.field if self.p else QQ
        out = Poly(self.datum.num_vars, {}, F)
        for i, coef in c.coeffs.items():
            out = out + reps[i].scale(coef)
        return out

    # -- Steenrod ------------------------------------------------------------------

    @property
    def steenrod_shift(self) -> int:
        """Half-degree shift of the operation: p - 1 for P^1, 1 for Sq^2."""
        return self.p - 1 if self.p > 2 else 1

    def _reduced_power_derivation(self, f: Poly) -> Poly:
        # P^1 (Sq^2 for p = 2) on a polynomial in degree-2 classes: sum_i x_i^p d/dx_i
        n = self.datum.num_vars
        out = Poly(n, {}, f.field)
        for i in range(n):
            d = f.derivative(i)
            if d:
                out = out + d * (Poly.var(n, i, f.field) ** self.p)
        return out

    @cached_property
    def steenrod_matrices(self) -> dict[int, list[list] | None]:
        """For each half-degree k, the matrix of the operation H^{2k} -> H^{2k+2*shift}.

        Columns that are not known are ``None`` entries in a column list; the
        dict maps k to a list of columns (each a vector or None).
        """
        if self.p == 0:
            raise ValueError("Steenrod operations need a prime")
        if self.datum.type_tag == "G2" and self.p == 2:
            return _g2_sq2_columns(self)
        if self.quotient is None:
            raise ConsistencyError(f"Steenrod operation unavailable for {self.datum.type_tag} mod {self.p}")
        F = self.field
        s = self.steenrod_shift
        out = {}
        for k in range(self.N + 1):
            cols = []
            for w in self.basis[k]:
                if k + s > self.N:
                    cols.append([])
                    continue
                r1 = self.reps[w.index]
                r2 = self.quotient.lift(self.quotient.normal_form(r1, k), k)
                img1 = self.quotient.normal_form(self._reduced_power_derivation(r1), k + s)
                img2 = self.quotient.normal_form(self._reduced_power_derivation(r2), k + s)
                if img1 != img2:
                    raise ConsistencyError(
                        f"Steenrod operation depends on the representative of s[{w}] mod {self.p}"
                    )
                cols.append(linalg.matvec(self._to_schubert_inv[k + s], img1, F))
            out[k] = cols
        return out

    def steenrod(self, c: CohomologyClass) -> CohomologyClass:
        """P^1 (odd p) or Sq^2 (p = 2); raises :class:`SteenrodUnknown` on unlisted G2 values."""
        F = self.field
        s = self.steenrod_shift
        mats = self.steenrod_matrices
        out: dict[int, object] = {}
        for idx, coef in c.coeffs.items():
            w = self.W[idx]
            k = w.length
            if k + s > self.N:
                continue
            col = mats[k][self.basis[k].index(w)]
            if col is None:
                raise SteenrodUnknown(f"Sq^2(s[{w}]) is not determined for G2")
            for v, x in zip(self.basis[k + s], col):
                if not F.is_zero(x):
                    out[v.index] = F.add(out.get(v.index, F.zero), F.mul(coef, x))
        return CohomologyClass(self, out)

    def steenrod_known(self, c: CohomologyClass) -> bool:
        try:
            self.steenrod(c)
        except SteenrodUnknown:
            return False
        return True


# Sq^2 on H*(G2/T; F_2): only these values are available; everything else is unknown.
G2_SQ2_TABLE = {"1": "21", "2": "12", "1212": "21212", "2121": "12121"}


def g2_sq2_table() -> dict[str, str | None]:
    """Sq^2 data for G2 mod 2 on every Schubert class: target word, or None when unknown."""
    W = enumerate_weyl(build_root_datum("G2"))
    out: dict[str, str | None] = {}
    for w in sorted(W, key=lambda e: (e.length, e.word)):
        if w.length == 0 or w.length + 1 > W.max_length:
            out[str(w)] = "0"  # degree reasons: Sq^2 kills H^0 and H^top
        else:
            out[str(w)] = G2_SQ2_TABLE.get(w.word)
    return out


def _g2_sq2_columns(alg: CoinvariantAlgebra) -> dict[int, list]:
    table = g2_sq2_table()
    out: dict[int, list] = {}
    for k in range(alg.N + 1):
        cols = []
        for w in alg.basis[k]:
            tgt = table[str(w)]
            if k + 1 > alg.N:
                cols.append([])
            elif tgt is None:
                cols.append(None)
            elif tgt == "0":
                cols.append([0] * alg.dim(k + 1))
            else:
                t = alg.W.parse_word(tgt)
                cols.append([int(v.index == t.index) for v in alg.basis[k + 1]])
        out[k] = cols
    return out


_ALGEBRAS: dict[tuple, CoinvariantAlgebra] = {}


def build_algebra(type_tag: str, p: int = 0, labeling=None) -> CoinvariantAlgebra:
    """H*(G/T; QQ) for p == 0, H*(G/T; F_p) otherwise (cached)."""
    model = schubert_model(type_tag, labeling)
    key = (model.datum.type_tag, model.datum.labeling, p)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = CoinvariantAlgebra(model, p)
    return _ALGEBRAS[key]


def schubert_basis(alg: CoinvariantAlgebra) -> dict[str, Poly]:
    """Rational representative of every Schubert class, keyed by word ("e" for 1)."""
    return {str(w): alg.model.reps[w.index] for w in alg.W}


def to_schubert(alg: CoinvariantAlgebra, f: Poly) -> CohomologyClass:
    return alg.class_of_poly(f)


def multiply_classes(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    return a.ring.multiply(a, b)


def steenrod(p: int, c: CohomologyClass) -> CohomologyClass:
    if c.ring.p != p:
        raise ValueError(f"class lives mod {c.ring.p}, not mod {p}")
    return c.ring.steenrod(c)
