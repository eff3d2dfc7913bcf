"""Root data for types A_n, C2, G2 and exhaustive enumeration of their Weyl groups.

Linear forms in the variables ``x1..xn`` are integer column vectors; a Weyl
element is stored as the integer matrix ``M`` with ``w(x_j) = sum_k M[k][j] x_k``.
Products of elements are products of these matrices, so ``s_{i1 i2 ... ik}``
is ``M_{i1} M_{i2} ... M_{ik}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
import re

MAX_A_RANK = 5

# Cartan matrices a_ij = <alpha_i^vee, alpha_j> in Bourbaki labelling
# (C2: alpha_1 short; G2: alpha_1 short).
STANDARD_CARTAN = {
    "C2": ((2, -2), (-1, 2)),
    "G2": ((2, -3), (-1, 2)),
}

# Generator order pinned by the calibration in ``flagsplit.calibration``:
# for each type the tuple lists which Bourbaki root plays s_1, s_2.
PINNED_LABELING = {
    "C2": (1, 0),
    "G2": (0, 1),
}


class RootDatumError(ValueError):
    pass


Matrix = tuple[tuple[int, ...], ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _matvec(a: Matrix, v) -> tuple[int, ...]:
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _from_images(images: list[list[int]]) -> Matrix:
    """Matrix whose column j is the image of x_j."""
    n = len(images)
    return tuple(tuple(images[j][i] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class RootDatum:
    type_tag: str
    num_vars: int
    simple_roots: tuple[tuple[int, ...], ...]
    reflections: tuple[Matrix, ...]
    form: Matrix  # W-invariant (possibly degenerate) symmetric form on linear forms
    labeling: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def pairing(self, u, v) -> int:
        return sum(u[i] * self.form[i][j] * v[j] for i in range(self.num_vars) for j in range(self.num_vars))

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for a in self.simple_roots:
            row = []
            for b in self.simple_roots:
                num, den = 2 * self.pairing(a, b), self.pairing(a, a)
                if num % den:
                    raise RootDatumError("non-integral Cartan entry")
                row.append(num // den)
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Roots that are non-negative combinations of simple roots, as linear forms."""
        roots = set(self.simple_roots)
        frontier = list(roots)
        while frontier:
            new = []
            for r in frontier:
                for s in self.reflections:
                    img = _matvec(s, r)
                    if img not in roots:
                        roots.add(img)
                        new.append(img)
            frontier = new
        return tuple(sorted(r for r in roots if self._is_positive(r)))

    def _is_positive(self, r) -> bool:
        coeffs = self.simple_root_coordinates(r)
        return all(c >= 0 for c in coeffs) and any(c > 0 for c in coeffs)

    def simple_root_coordinates(self, r) -> tuple:
        from .linalg import QQ, solve_columns

        cols = [[a[i] for a in self.simple_roots] for i in range(self.num_vars)]
        return tuple(solve_columns(cols, list(r), QQ))

    def bourbaki_cartan(self) -> tuple[tuple[int, ...], ...]:
        """Cartan matrix with the labelling undone, for comparison with the standard one."""
        inv = [self.labeling.index(k) for k in range(len(self.labeling))]
        c = self.cartan_matrix
        return tuple(tuple(c[inv[i]][inv[j]] for j in range(len(inv))) for i in range(len(inv)))


def _parse_type(type_tag: str) -> tuple[str, int]:
    tag = type_tag.strip().upper().replace("_", "")
    aliases = {"SP2": "C2", "SP(2)": "C2", "B2": "C2"}
    tag = aliases.get(tag, tag)
    m = re.fullmatch(r"SU\(?(\d+)\)?", tag)
    if m:
        tag = f"A{int(m.group(1)) - 1}"
    m = re.fullmatch(r"A\(?(\d+)\)?", tag)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise RootDatumError(f"unsupported type {type_tag!r}")
        return "A", n
    if tag in ("C2", "G2"):
        return tag, 2
    raise RootDatumError(f"unsupported type {type_tag!r}")


def canonical_type(type_tag: str) -> str:
    kind, n = _parse_type(type_tag)
    return f"A{n}" if kind == "A" else kind


def build_root_datum(type_tag: str, labeling: tuple[int, ...] | None = None, max_a_rank: int = MAX_A_RANK) -> RootDatum:
    """Root datum for ``A<n>``, ``C2`` or ``G2`` (aliases ``SU<n+1>``, ``Sp2``).

    ``labeling`` permutes the Bourbaki-ordered simple roots into ``s_1, s_2, ...``;
    by default the calibrated labelling from :data:`PINNED_LABELING` is used.
    """
    kind, n = _parse_type(type_tag)
    if kind == "A":
        if n > max_a_rank:
            raise RootDatumError(f"A{n} exceeds the enumeration bound A{max_a_rank}")
        nv = n + 1
        roots, refls = [], []
        for i in range(n):
            r = [0] * nv
            r[i], r[i + 1] = 1, -1
            roots.append(tuple(r))
            images = [[int(k == j) for k in range(nv)] for j in range(nv)]
            images[i], images[i + 1] = images[i + 1], images[i]
            refls.append(_from_images(images))
        form = _identity(nv)
        lab = tuple(range(n))
        tag = f"A{n}"
    elif kind == "C2":
        nv = 2
        # alpha_1 = x1 - x2 (short, swaps x1, x2); alpha_2 = 2 x2 (long, negates x2)
        roots = [(1, -1), (0, 2)]
        refls = [_from_images([[0, 1], [1, 0]]), _from_images([[1, 0], [0, -1]])]
        form = _identity(2)
        lab = PINNED_LABELING["C2"] if labeling is None else tuple(labeling)
        tag = "C2"
    else:
        nv = 3
        # x1, x2, x3 with x1 + x2 + x3 central; short roots +-x_i, long roots +-(x_i - x_j)
        # alpha_1 = x1 (short): x1 -> -x1, x_j -> x_j + x1, a genuine reflection fixing e1
        # alpha_2 = x2 - x1 (long): swaps x1 and x2
        roots = [(1, 0, 0), (-1, 1, 0)]
        refls = [
            _from_images([[-1, 0, 0], [1, 1, 0], [1, 0, 1]]),
            _from_images([[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
        ]
        form = tuple(tuple(3 * int(i == j) - 1 for j in range(3)) for i in range(3))
        lab = PINNED_LABELING["G2"] if labeling is None else tuple(labeling)
        tag = "G2"
    if sorted(lab) != list(range(len(roots))):
        raise RootDatumError(f"bad labeling {lab}")
    return RootDatum(
        type_tag=tag,
        num_vars=nv,
        simple_roots=tuple(tuple(roots[k]) for k in lab),
        reflections=tuple(refls[k] for k in lab),
        form=form,
        labeling=lab,
    )


# -- Weyl groups ---------------------------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    index: int
    word: str  # lexicographically least reduced word; "" for the identity
    matrix: Matrix = field(repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.word)

    def __str__(self) -> str:
        return self.word or "e"


class WeylGroup:
    """All elements of a finite Weyl group, found by closing {e} under right
    multiplication by simple reflections, breadth first."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.rank = datum.rank
        ident = _identity(datum.num_vars)
        elements = [WeylElement(0, "", ident)]
        by_matrix = {ident: 0}
        right = [[None] * self.rank]
        level = [0]
        while level:
            nxt = []
            # level is kept in lexicographic order of normal forms, so the first
            # word reaching a new element is its lexicographically least reduced word
            for idx in level:
                w = elements[idx]
                for i in range(self.rank):
                    m = _matmul(w.matrix, datum.reflections[i])
                    j = by_matrix.get(m)
                    if j is None:
                        j = len(elements)
                        elements.append(WeylElement(j, w.word + str(i + 1), m))
                        by_matrix[m] = j
                        right.append([None] * self.rank)
                        nxt.append(j)
                    right[idx][i] = j
            level = nxt
        self.elements: list[WeylElement] = elements
        self._by_matrix = by_matrix
        self._by_word = {e.word: e.index for e in elements}
        self._right = right
        self.w0 = max(elements, key=lambda e: e.length)
        self._mult: dict = {}
        self._inverse: dict = {}
        self._bruhat: dict = {}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> WeylElement:
        return self.elements[i]

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def max_length(self) -> int:
        return self.w0.length

    def generator(self, i: int) -> WeylElement:
        """Simple reflection s_i, 1-based."""
        return self.elements[self._right[0][i - 1]]

    def by_length(self, k: int) -> list[WeylElement]:
        return sorted((e for e in self.elements if e.length == k), key=lambda e: e.word)

    def right_mult_gen(self, w: WeylElement, i: int) -> WeylElement:
        """w * s_i for a 1-based generator index."""
        return self.elements[self._right[w.index][i - 1]]

    def multiply(self, w: WeylElement, v: WeylElement) -> WeylElement:
        key = (w.index, v.index)
        if key not in self._mult:
            cur = w.index
            for i in v.letters:
                cur = self._right[cur][i - 1]
            self._mult[key] = cur
        return self.elements[self._mult[key]]

    def inverse(self, w: WeylElement) -> WeylElement:
        if w.index not in self._inverse:
            self._inverse[w.index] = self.parse_word(w.word[::-1]).index
        return self.elements[self._inverse[w.index]]

    def parse_word(self, word: str) -> WeylElement:
        """Element represented by a (not necessarily reduced) word of digits; "e" or "" is 1."""
        word = word.strip()
        if word in ("", "e"):
            return self.identity
        cur = 0
        for ch in word:
            if not ch.isdigit() or not 1 <= int(ch) <= self.rank:
                raise ValueError(f"bad generator {ch!r} in word {word!r} (rank {self.rank})")
            cur = self._right[cur][int(ch) - 1]
        return self.elements[cur]

    def element(self, word: str) -> WeylElement:
        return self.parse_word(word)

    def from_matrix(self, m: Matrix) -> WeylElement:
        return self.elements[self._by_matrix[m]]

    def has_right_descent(self, w: WeylElement, i: int) -> bool:
        return self.right_mult_gen(w, i).length < w.length

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        """Strong Bruhat order via the lifting property on a right descent of ``w``."""
        key = (v.index, w.index)
        hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        if v.length > w.length:
            res = False
        elif w.length == 0:
            res = v.length == 0
        elif v.length == w.length:
            res = v.index == w.index
        else:
            i = w.letters[-1]
            ws = self.right_mult_gen(w, i)
            vs = self.right_mult_gen(v, i)
            res = self.bruhat_leq(vs, ws) if vs.length < v.length else self.bruhat_leq(v, ws)
        self._bruhat[key] = res
        return res

    def poincare_ranks(self) -> list[int]:
        counts = [0] * (self.max_length + 1)
        for e in self.elements:
            counts[e.length] += 1
        return counts

    def hasse_edges(self) -> list[tuple[WeylElement, WeylElement]]:
        out = []
        for k in range(self.max_length):
            for v in self.by_length(k):
                for w in self.by_length(k + 1):
                    if self.bruhat_leq(v, w):
                        out.append((v, w))
        return out

    def reduced_words(self, w: WeylElement) -> list[str]:
        """Every reduced word of ``w`` (exponential; intended for small groups)."""
        if w.length == 0:
            return [""]
        out = []
        for i in range(1, self.rank + 1):
            ws = self.right_mult_gen(w, i)
            if ws.length < w.length:
                out.extend(u + str(i) for u in self.reduced_words(ws))
        return sorted(out)

    def letter_count(self, w: WeylElement, i: int) -> int:
        """Number of letters s_i in the normal form of ``w``."""
        return w.word.count(str(i))


def enumerate_weyl(datum: RootDatum) -> WeylGroup:
    return WeylGroup(datum)


def multiply(W: WeylGroup, w: WeylElement, v: WeylElement) -> WeylElement:
    return W.multiply(w, v)


def parse_word(W: WeylGroup, digits: str) -> WeylElement:
    return W.parse_word(digits)


def bruhat_leq(W: WeylGroup, v: WeylElement, w: WeylElement) -> bool:
    return W.bruhat_leq(v, w)


def poincare_ranks(W: WeylGroup) -> list[int]:
    return W.poincare_ranks()


def subword_bruhat_leq(W: WeylGroup, v: WeylElement, w: WeylElement) -> bool:
    """Independent check of the Bruhat order: ``v`` is the product of a subword of
    some reduced word of ``w``."""
    for word in W.reduced_words(w):
        for mask in product((0, 1), repeat=len(word)):
            sub = "".join(c for c, keep in zip(word, mask) if keep)
            if W.parse_word(sub).index == v.index:
                return True
    return False
