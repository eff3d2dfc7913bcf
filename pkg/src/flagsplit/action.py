"""The Weyl group action on H*(G/T) in the Schubert basis, and its extension to F_p[W].

Generator matrices come from substituting the reflection into the rational
Schubert representatives.  A word acts either as the composite of its letters
(``direct``: w acts as the ring map induced by its matrix) or through its
inverse (``inverse``).  Which one reproduces the published images is settled
once by :mod:`flagsplit.calibration`, and the answer is pinned below.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import linalg
from .coinvariant import CoinvariantAlgebra, CohomologyClass, SchubertModel, act_on_poly
from .groupring import GroupRingElement
from .linalg import QQ, GF
from .rootweyl import WeylElement

CONVENTIONS = ("direct", "inverse")
PINNED_CONVENTION = "direct"


class ActionError(RuntimeError):
    pass


class ActionMatrixSet:
    """Integer matrices of every w in every degree; column j is the image of basis[k][j]."""

    def __init__(self, model: SchubertModel, convention: str = PINNED_CONVENTION):
        if convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {convention!r}")
        self.model = model
        self.W = model.W
        self.N = model.N
        self.convention = convention
        self.generators = model.generator_action  # [i][k] -> matrix
        self._cache: dict[tuple[int, int], list[list[int]]] = {}
        self._mod: dict[tuple[int, int, int], list[list[int]]] = {}

    def matrix(self, w: WeylElement, k: int) -> list[list[int]]:
        key = (w.index, k)
        if key not in self._cache:
            letters = w.letters if self.convention == "direct" else w.letters[::-1]
            n = len(self.model.basis[k])
            m = [[int(i == j) for j in range(n)] for i in range(n)]
            for i in letters:
                m = _int_matmul(m, self.generators[i - 1][k])
            self._cache[key] = m
        return self._cache[key]

    def matrix_mod(self, w: WeylElement, k: int, p: int) -> list[list[int]]:
        key = (w.index, k, p)
        if key not in self._mod:
            self._mod[key] = [[x % p for x in row] for row in self.matrix(w, k)]
        return self._mod[key]

    def operator(self, c: GroupRingElement, k: int) -> list[list[int]]:
        """Matrix of sum_w c_w w on the degree-2k piece, over F_p."""
        p = c.p
        n = len(self.model.basis[k])
        out = [[0] * n for _ in range(n)]
        for idx, coef in c.coeffs.items():
            m = self.matrix_mod(self.W[idx], k, p)
            for r in range(n):
                row, mrow = out[r], m[r]
                for s in range(n):
                    if mrow[s]:
                        row[s] = (row[s] + coef * mrow[s]) % p
        return out

    def act_element(self, w: WeylElement, cls: CohomologyClass) -> CohomologyClass:
        alg = cls.ring
        F = alg.field
        out: dict[int, object] = {}
        for idx, coef in cls.coeffs.items():
            v = self.W[idx]
            k = v.length
            j = self.model.basis[k].index(v)
            m = self.matrix(w, k)
            for r, u in enumerate(self.model.basis[k]):
                x = m[r][j]
                if x:
                    out[u.index] = F.add(out.get(u.index, F.zero), F.mul(coef, F(x)))
        return CohomologyClass(alg, out)

    def image(self, c: GroupRingElement, alg: CoinvariantAlgebra) -> dict[int, list[list[int]]]:
        """Per degree, a reduced row-echelon basis of the image of c (rows are Schubert vectors)."""
        F = GF(c.p)
        out = {}
        for k in range(self.N + 1):
            cols = linalg.transpose(self.operator(c, k))
            out[k] = linalg.row_space_basis(cols, F)
        return out


def _int_matmul(a, b):
    n, m = len(a), len(b[0]) if b else 0
    inner = len(b)
    return [[sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(m)] for i in range(n)]


_ACTIONS: dict[tuple, ActionMatrixSet] = {}


def build_action(algebra_or_model, convention: str = PINNED_CONVENTION) -> ActionMatrixSet:
    model = algebra_or_model.model if isinstance(algebra_or_model, CoinvariantAlgebra) else algebra_or_model
    key = (id(model), convention)
    if key not in _ACTIONS:
        _ACTIONS[key] = ActionMatrixSet(model, convention)
    return _ACTIONS[key]


def act(c: GroupRingElement, cls: CohomologyClass, p: int | None = None, action: ActionMatrixSet | None = None) -> CohomologyClass:
    """Apply sum_w c_w w to a class over F_p."""
    alg = cls.ring
    if p is not None and (p != c.p or p != alg.p):
        raise ValueError(f"prime mismatch: element mod {c.p}, class mod {alg.p}, requested {p}")
    if c.p != alg.p:
        raise ValueError(f"prime mismatch: element mod {c.p}, class mod {alg.p}")
    action = action or build_action(alg)
    out = alg.zero()
    for idx, coef in c.coeffs.items():
        out = out + coef * action.act_element(action.W[idx], cls)
    return out


def operator_level_report(system: Sequence[GroupRingElement], alg: CoinvariantAlgebra, action: ActionMatrixSet) -> dict[str, bool]:
    F = alg.field
    idem = orth = total_ok = True
    for k in range(action.N + 1):
        ops = [action.operator(c, k) for c in system]
        n = len(action.model.basis[k])
        for i, a in enumerate(ops):
            if linalg.matmul(a, a, F) != a:
                idem = False
            for j, b in enumerate(ops):
                if i != j and any(any(r) for r in linalg.matmul(a, b, F)):
                    orth = False
        total = linalg.zeros(n, n, F)
        for a in ops:
            total = linalg.matadd(total, a, F)
        if total != linalg.identity(n, F):
            total_ok = False
    return {"idempotent": idem, "orthogonal": orth, "sum_to_one": total_ok}


# -- consistency checks -------------------------------------------------------------


def check_against_substitution(action: ActionMatrixSet, w: WeylElement) -> bool:
    """Compare the composed matrix of w with direct substitution of w's matrix (or its inverse)."""
    model = action.model
    target = w if action.convention == "direct" else model.W.inverse(w)
    for k in range(model.N + 1):
        cols = [model.to_schubert(act_on_poly(model.datum, target, model.reps[v.index]), k) for v in model.basis[k]]
        if [[int(x) for x in r] for r in linalg.transpose(cols)] != action.matrix(w, k):
            return False
    return True


def ring_automorphism_holds(action: ActionMatrixSet, w: WeylElement, u: WeylElement, v: WeylElement) -> bool:
    """w(sigma_u sigma_v) == w(sigma_u) w(sigma_v) over QQ."""
    from .coinvariant import build_algebra

    datum = action.model.datum
    alg = build_algebra(datum.type_tag, 0, datum.labeling or None)
    a, b = alg.sigma(u), alg.sigma(v)
    lhs = action.act_element(w, alg.multiply(a, b))
    rhs = alg.multiply(action.act_element(w, a), action.act_element(w, b))
    return lhs == rhs


def steenrod_commutes(action: ActionMatrixSet, alg: CoinvariantAlgebra, w: WeylElement, v: WeylElement) -> bool | None:
    """Naturality on sigma_v; None when the operation is not determined there."""
    from .coinvariant import SteenrodUnknown

    c = alg.sigma(v)
    try:
        lhs = alg.steenrod(action.act_element(w, c))
        rhs = action.act_element(w, alg.steenrod(c))
    except SteenrodUnknown:
        return None
    return lhs == rhs


# -- the BGG formula as a cross-check -----------------------------------------------

BGG_READINGS = {
    "excl-simple/w.s_i.s_beta": "beta positive, beta != alpha_i, term sigma_{w s_i s_beta}",
    "all-positive/w.s_i.s_beta": "beta positive, term sigma_{w s_i s_beta}",
    "excl-simple/w.s_beta": "beta positive, beta != alpha_i, term sigma_{w s_beta}",
    "excl-simple/w.s_i.s_beta/coroot": "as the first reading with 2(beta,alpha_i)/(alpha_i,alpha_i)",
}


def root_reflection(W, beta) -> WeylElement:
    datum = W.datum
    n = datum.num_vars
    bb = datum.pairing(beta, beta)
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        c = Fraction(2 * datum.pairing(e, beta), bb)
        img = [Fraction(e[i]) - c * beta[i] for i in range(n)]
        if any(x.denominator != 1 for x in img):
            raise ActionError(f"reflection in {beta} is not integral")
        cols.append([int(x) for x in img])
    m = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return W.from_matrix(m)


def bgg_formula(W, reading: str, i: int, w: WeylElement) -> dict[int, Fraction]:
    """s_i sigma_w by the displayed formula under one reading of its index set."""
    datum = W.datum
    s = W.generator(i)
    ws = W.multiply(w, s)
    if ws.length == w.length + 1:
        return {w.index: Fraction(1)}
    alpha = datum.simple_roots[i - 1]
    out: dict[int, Fraction] = {w.index: Fraction(-1)}
    for beta in datum.positive_roots:
        if beta == alpha and reading.startswith("excl-simple"):
            continue
        sb = root_reflection(W, beta)
        if W.multiply(ws, sb).length != w.length:
            continue
        if reading.endswith("/coroot"):
            coef = Fraction(2 * datum.pairing(beta, alpha), datum.pairing(alpha, alpha))
        else:
            coef = Fraction(2 * datum.pairing(beta, alpha), datum.pairing(beta, beta))
        target = W.multiply(w, sb) if "/w.s_beta" in reading else W.multiply(ws, sb)
        out[target.index] = out.get(target.index, 0) - coef
    return {k: v for k, v in out.items() if v}


def bgg_crosscheck(action: ActionMatrixSet, i: int, w: WeylElement, reading: str = "excl-simple/w.s_i.s_beta") -> dict:
    """Compare one reading of the displayed formula for s_i sigma_w with the generator matrix."""
    model = action.model
    k = w.length
    j = model.basis[k].index(w)
    col = [row[j] for row in model.generator_action[i - 1][k]]
    matrix_value = {u.index: Fraction(x) for u, x in zip(model.basis[k], col) if x}
    formula_value = bgg_formula(model.W, reading, i, w)
    return {
        "generator": i,
        "class": str(w),
        "reading": reading,
        "matrix": {str(model.W[a]): int(b) for a, b in sorted(matrix_value.items())},
        "formula": {str(model.W[a]): str(b) for a, b in sorted(formula_value.items())},
        "agree": matrix_value == formula_value,
    }


def bgg_summary(action: ActionMatrixSet) -> dict[str, bool]:
    """For each reading, whether it agrees with the matrices on every (s_i, sigma_w)."""
    W = action.W
    return {
        reading: all(
            bgg_crosscheck(action, i, w, reading)["agree"] for i in range(1, W.rank + 1) for w in W
        )
        for reading in BGG_READINGS
    }
