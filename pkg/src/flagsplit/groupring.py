"""The modular group ring F_p[W]: parsing, arithmetic, idempotent systems and their search."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import networkx as nx

from .linalg import GF, is_prime
from .rootweyl import WeylElement, WeylGroup

DEFAULT_BUDGET = 10 ** 7
CHARACTERS = ("trivial", "sign", "sign_1", "sign_2")


class GroupRingParseError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class GroupRingElement:
    """Sparse element of F_p[W]: {element index: coefficient in range(p)}."""

    __slots__ = ("W", "p", "coeffs")

    def __init__(self, W: WeylGroup, p: int, coeffs: dict[int, object] | None = None):
        F = GF(p)
        self.W = W
        self.p = p
        self.coeffs = {}
        for i, c in (coeffs or {}).items():
            c = F(c)
            if c:
                self.coeffs[i] = c

    @classmethod
    def unit(cls, W: WeylGroup, p: int) -> "GroupRingElement":
        return cls(W, p, {0: 1})

    @classmethod
    def basis(cls, W: WeylGroup, p: int, w: WeylElement) -> "GroupRingElement":
        return cls(W, p, {w.index: 1})

    def _check(self, other: "GroupRingElement"):
        if other.p != self.p or other.W is not self.W:
            raise ValueError("group ring elements over different primes or groups")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) + c
        return GroupRingElement(self.W, self.p, out)

    def __neg__(self):
        return GroupRingElement(self.W, self.p, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return GroupRingElement(self.W, self.p, {i: scalar * c for i, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupRingElement):
            return self.__rmul__(other)
        return gr_multiply(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and self.p == other.p
            and self.W is other.W
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, w: WeylElement | str) -> int:
        if isinstance(w, str):
            w = self.W.parse_word(w)
        return self.coeffs.get(w.index, 0)

    def sort_key(self) -> tuple:
        """Coefficient vector in the fixed element order (length, normal form)."""
        return tuple(self.coeffs.get(w.index, 0) for w in _ordered(self.W))

    def __str__(self):
        return format_gr(self)

    __repr__ = __str__


def _ordered(W: WeylGroup) -> list[WeylElement]:
    return sorted(W, key=lambda e: (e.length, e.word))


def format_gr(x: GroupRingElement) -> str:
    """Canonical text: ``2 + s[2] + 2*s[13]``; coefficients in 0..p-1."""
    if not x.coeffs:
        return "0"
    parts = []
    for w in _ordered(x.W):
        c = x.coeffs.get(w.index)
        if not c:
            continue
        if w.length == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(f"s[{w.word}]")
        else:
            parts.append(f"{c}*s[{w.word}]")
    return " + ".join(parts)


def gr_multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    a._check(b)
    W = a.W
    out: dict[int, int] = {}
    for i, ca in a.coeffs.items():
        wi = W[i]
        for j, cb in b.coeffs.items():
            k = W.multiply(wi, W[j]).index
            out[k] = out.get(k, 0) + ca * cb
    return GroupRingElement(W, a.p, out)


# -- characters -------------------------------------------------------------------


def character_value(W: WeylGroup, character: str, w: WeylElement) -> int:
    if character == "trivial":
        return 1
    if character == "sign":
        return (-1) ** w.length
    m = re.fullmatch(r"sign_(\d)", character)
    if m:
        i = int(m.group(1))
        if W.rank != 2 or not 1 <= i <= 2:
            raise GroupRingParseError(f"{character} is only defined for rank-2 dihedral groups")
        return (-1) ** W.letter_count(w, i)
    raise GroupRingParseError(f"unknown character {character!r}")


def _character_sum(W: WeylGroup, character: str) -> dict[int, Fraction]:
    return {w.index: Fraction(character_value(W, character, w)) for w in W}


def build_character_element(W: WeylGroup, character: str, scale, p: int) -> GroupRingElement:
    """scale * sum_w chi(w) w, e.g. (1/12) sum_w (-1)^{l(w)} w."""
    scale = Fraction(scale)
    if scale.denominator % p == 0:
        raise GroupRingParseError(f"scale {scale} not defined mod {p}")
    F = GF(p)
    return GroupRingElement(W, p, {i: F(scale * c) for i, c in _character_sum(W, character).items()})


# -- parsing ----------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<gen>s\s*(?:\[\s*(?P<w1>[0-9e]*)\s*\]|_\{(?P<w2>[0-9e]*)\}|_?(?P<w3>\d+)))"
    r"|(?P<sum>sum\s*\[\s*(?P<chr>[a-z_0-9]+)\s*\])|(?P<name>[a-rt-zA-Z_]\w*)|(?P<op>[-+*/()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise GroupRingParseError(f"cannot parse {text[pos:]!r}")
        pos = m.end()
        if m.group("num") is not None:
            toks.append(("num", m.group("num")))
        elif m.group("gen") is not None:
            word = m.group("w1") if m.group("w1") is not None else (m.group("w2") if m.group("w2") is not None else m.group("w3"))
            toks.append(("gen", word))
        elif m.group("sum") is not None:
            toks.append(("sum", m.group("chr")))
        elif m.group("name") is not None:
            toks.append(("name", m.group("name")))
        else:
            toks.append(("op", m.group("op")))
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return toks


class _Parser:
    """Recursive descent over  expr := ['+'|'-'] term (('+'|'-') term)*,
    term := factor (['*'] factor | '/' number)*,
    factor := number | s[word] | sum[character] | name | '(' expr ')'.

    Names refer to elements defined earlier in the same system (``c8 = 1 - c1 - c2``)."""

    def __init__(self, text: str, W: WeylGroup, env: dict | None = None):
        self.toks = _tokenize(text)
        self.i = 0
        self.W = W
        self.env = env or {}

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> dict[int, Fraction]:
        if not self.toks:
            raise GroupRingParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise GroupRingParseError(f"trailing input at token {self.peek()}")
        return v

    def expr(self):
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = _scale(self.term(), sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
            acc = _add(acc, _scale(self.term(), sign))
        return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                acc = _mul(acc, self.factor(), self.W)
            elif (kind, val) == ("op", "/"):
                self.take()
                k, d = self.take()
                if k != "num" or int(d) == 0:
                    raise GroupRingParseError("division only by non-zero integers")
                acc = _scale(acc, Fraction(1, int(d)))
            elif kind in ("num", "gen", "sum", "name") or (kind, val) == ("op", "("):
                acc = _mul(acc, self.factor(), self.W)
            else:
                return acc

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            return {0: Fraction(int(val))}
        if kind == "gen":
            try:
                w = self.W.parse_word(val or "e")
            except ValueError as exc:
                raise GroupRingParseError(str(exc)) from exc
            return {w.index: Fraction(1)}
        if kind == "sum":
            return _character_sum(self.W, val)
        if kind == "name":
            if val not in self.env:
                raise GroupRingParseError(f"undefined name {val!r}")
            return dict(self.env[val])
        if (kind, val) == ("op", "("):
            v = self.expr()
            if self.take() != ("op", ")"):
                raise GroupRingParseError("unbalanced parenthesis")
            return v
        raise GroupRingParseError(f"unexpected token {val!r}")


def _add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _scale(a, s):
    return {k: v * s for k, v in a.items() if v * s}


def _mul(a, b, W):
    out: dict[int, Fraction] = {}
    for i, x in a.items():
        for j, y in b.items():
            k = W.multiply(W[i], W[j]).index
            out[k] = out.get(k, 0) + x * y
    return {k: v for k, v in out.items() if v}


def parse_rational(text: str, W: WeylGroup, env: dict | None = None) -> dict[int, Fraction]:
    """Exact rational group-ring element (before reduction mod p)."""
    return _Parser(text, W, env).parse()


def parse_gr(text: str, p: int, W: WeylGroup, env: dict | None = None) -> GroupRingElement:
    """Parse ``1/8 * (1 + s[1] - s[212])``, ``(1+s[1])*(1-s[12321])``, ``1/12*sum[sign]``..."""
    if not is_prime(p):
        raise GroupRingParseError(f"{p} is not prime")
    rat = parse_rational(text, W, env)
    F = GF(p)
    out = {}
    for i, c in rat.items():
        try:
            out[i] = F(c)
        except ZeroDivisionError as exc:
            raise GroupRingParseError(f"coefficient {c} not invertible mod {p}") from exc
    return GroupRingElement(W, p, out)


def _parse_linear_combination(text: str, W: WeylGroup) -> list[tuple[WeylElement, Fraction]]:
    return [(W[i], c) for i, c in parse_rational(text, W).items()]


# -- idempotent systems -------------------------------------------------------------


@dataclass
class IdempotentSystem:
    elements: list[GroupRingElement]
    names: list[str] = field(default_factory=list)
    mode: str = "ring"

    def __post_init__(self):
        if not self.names:
            self.names = [f"c{i + 1}" for i in range(len(self.elements))]

    @property
    def p(self) -> int:
        return self.elements[0].p

    @property
    def W(self) -> WeylGroup:
        return self.elements[0].W

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def ring_level_report(system: Sequence[GroupRingElement]) -> dict[str, bool]:
    elems = list(system)
    W, p = elems[0].W, elems[0].p
    idem = all(gr_multiply(c, c) == c for c in elems)
    orth = all(
        not gr_multiply(a, b) for i, a in enumerate(elems) for j, b in enumerate(elems) if i != j
    )
    total = GroupRingElement(W, p)
    for c in elems:
        total = total + c
    return {"idempotent": idem, "orthogonal": orth, "sum_to_one": total == GroupRingElement.unit(W, p)}


def verify_system(system: Sequence[GroupRingElement], algebra=None, action=None) -> dict:
    """Both verification modes: in F_p[W] and, when an action is supplied, as operators
    on H*(G/T; F_p)."""
    report = {"ring_level": ring_level_report(system)}
    if action is not None:
        from .action import operator_level_report

        report["operator_level"] = operator_level_report(system, algebra, action)
    report["pass"] = all(report["ring_level"].values()) or (
        "operator_level" in report and all(report["operator_level"].values())
    )
    return report


def complement(system: Sequence[GroupRingElement]) -> GroupRingElement:
    W, p = system[0].W, system[0].p
    total = GroupRingElement(W, p)
    for c in system:
        total = total + c
    return GroupRingElement.unit(W, p) - total


def search_idempotents(
    span: Sequence[GroupRingElement],
    p: int,
    max_results: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[IdempotentSystem]:
    """Exhaustively find idempotents in the F_p-span of ``span`` and assemble them into
    maximal mutually orthogonal families, each completed by ``1 - sum`` when needed.

    Families come largest first, then by the lexicographic order of their sorted
    coefficient vectors, so the output does not depend on the order of ``span``.
    """
    if not span:
        raise ValueError("empty span")
    W = span[0].W
    k = len(span)
    if p ** k > budget:
        raise BudgetExceeded(f"{p}^{k} = {p ** k} candidates exceeds budget {budget}; reduce the span")
    one = GroupRingElement.unit(W, p)
    zero = GroupRingElement(W, p)
    seen = set()
    idempotents = []
    for coeffs in product(range(p), repeat=k):
        c = zero
        for t, g in zip(coeffs, span):
            if t:
                c = c + t * g
        if c in seen:
            continue
        seen.add(c)
        if c == zero or c == one:
            continue
        if gr_multiply(c, c) == c:
            idempotents.append(c)
    idempotents.sort(key=lambda x: x.sort_key())

    graph = nx.Graph()
    graph.add_nodes_from(range(len(idempotents)))
    for i, a in enumerate(idempotents):
        for j in range(i + 1, len(idempotents)):
            b = idempotents[j]
            if not gr_multiply(a, b) and not gr_multiply(b, a):
                graph.add_edge(i, j)

    families = set()
    for clique in nx.find_cliques(graph):
        members = [idempotents[i] for i in clique]
        rest = complement(members)
        if rest:
            if gr_multiply(rest, rest) != rest:
                continue
            members.append(rest)
        families.add(tuple(sorted(members, key=lambda x: x.sort_key())))
    if not families:
        families.add((one,))
    ordered = sorted(families, key=lambda fam: (-len(fam), [x.sort_key() for x in fam]))
    if max_results is not None:
        ordered = ordered[:max_results]
    return [IdempotentSystem(list(f), mode="ring") for f in ordered]


# -- idempotent files ---------------------------------------------------------------


def read_systems(text: str, p: int, W: WeylGroup) -> list[IdempotentSystem]:
    """One element per line, ``#`` comments, blank lines separate systems.

    A line may carry a name: ``c1 = 1 + s[12] + s[21]``.
    """
    systems: list[IdempotentSystem] = []
    elems, names = [], []
    env: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if raw.strip() == "" and elems:
                systems.append(IdempotentSystem(elems, names))
                elems, names, env = [], [], {}
            continue
        name = None
        m = re.match(r"^([A-Za-z_]\w*)\s*=\s*(.*)$", line)
        if m and not m.group(1).startswith("sum") and m.group(1) != "s":
            name, line = m.group(1), m.group(2)
        name = name or f"c{len(elems) + 1}"
        try:
            e = parse_gr(line, p, W, env)
        except GroupRingParseError as exc:
            raise GroupRingParseError(f"line {lineno}: {exc}") from exc
        elems.append(e)
        names.append(name)
        env[name] = {i: Fraction(c) for i, c in e.coeffs.items()}
    if elems:
        systems.append(IdempotentSystem(elems, names))
    return systems


def write_systems(systems: Iterable[IdempotentSystem], header: str | None = None) -> str:
    out = []
    if header:
        out.extend(f"# {h}" for h in header.splitlines())
    for s in systems:
        if out:
            out.append("")
        for name, e in zip(s.names, s.elements):
            out.append(f"{name} = {format_gr(e)}")
    return "\n".join(out) + "\n"
