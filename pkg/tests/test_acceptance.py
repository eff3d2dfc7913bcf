"""Acceptance criteria 1-10.

Each test records its individual checks in ``RESULTS``; ``conftest.py`` prints
one PASS/FAIL line per criterion at the end of the run.  Two sub-checks are
known to fail against the published values (see the reasons on the xfail
markers); they are kept red rather than adjusted.

Run alone with ``pytest tests/test_acceptance.py``.
"""

import random
import time
from collections import defaultdict
from itertools import product

import pytest

from flagsplit import action as action_mod
from flagsplit import coinvariant as coinvariant_mod
from flagsplit.action import build_action, ring_automorphism_holds, steenrod_commutes
from flagsplit.bundled import load_bundled
from flagsplit.coinvariant import build_algebra, divided_difference
from flagsplit.groupring import DEFAULT_BUDGET, parse_gr, search_idempotents, verify_system
from flagsplit.linalg import same_span
from flagsplit.poly import Poly
from flagsplit.rootweyl import build_root_datum, enumerate_weyl, subword_bruhat_leq
from flagsplit.splitting import dual_pairs, image_summands, parse_wedge_string, wedge_report

from reference_data import ARROW_TABLES, IMAGE_TABLES

TITLES = {
    1: "Weyl group ranks and orders",
    2: "SU(3) Schubert representatives",
    3: "Schubert products",
    4: "Steenrod operations",
    5: "idempotent verification",
    6: "image tables",
    7: "wedge strings",
    8: "dual pairs",
    9: "property suites",
    10: "search reproduction",
}

# criterion -> list of (check, passed)
RESULTS = defaultdict(list)


def check(n, label, ok):
    RESULTS[n].append((label, bool(ok)))
    return bool(ok)


def cold_caches():
    coinvariant_mod._MODELS.clear()
    coinvariant_mod._ALGEBRAS.clear()
    action_mod._ACTIONS.clear()


class Timer:
    def __init__(self, n, limit):
        self.n, self.limit = n, limit

    def __enter__(self):
        cold_caches()
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        check(self.n, f"runtime {self.elapsed:.2f}s < {self.limit}s", self.elapsed < self.limit)


def all_passed(n):
    failed = [label for label, ok in RESULTS[n] if not ok]
    assert not failed, failed


def span_equal(alg, rows_by_degree, classes):
    target = defaultdict(list)
    for text in classes:
        cls = alg.parse_class(text)
        for k in cls.degrees():
            target[k].append(cls.vector(k))
    return all(same_span(rows_by_degree[k], target.get(k, []), alg.field) for k in range(alg.N + 1))


# -- 1 -----------------------------------------------------------------------------


def test_criterion_1_ranks():
    with Timer(1, 1.0):
        A3 = enumerate_weyl(build_root_datum("A3"))
        C2 = enumerate_weyl(build_root_datum("C2"))
        G2 = enumerate_weyl(build_root_datum("G2"))
        check(1, "A3 ranks {1,3,5,6,5,3,1}", A3.poincare_ranks() == [1, 3, 5, 6, 5, 3, 1])
        check(1, "C2 ranks {1,2,2,2,1}", C2.poincare_ranks() == [1, 2, 2, 2, 1])
        check(1, "G2 order 12", len(G2) == 12)
        check(1, "A3 order 24", len(A3) == 24)
    all_passed(1)


# -- 2 -----------------------------------------------------------------------------


def test_criterion_2_su3_representatives():
    with Timer(2, 1.0):
        alg = build_algebra("A2")
        x1, x2 = Poly.var(3, 0), Poly.var(3, 1)
        expected = {"1": x1, "2": x1 + x2, "12": x1 * x2, "21": x1 * x1, "121": x1 * x1 * x2}
        for w, f in expected.items():
            check(2, f"s[{w}] -> {f}", alg.class_of_poly(f) == alg.sigma(w))
    all_passed(2)


# -- 3 -----------------------------------------------------------------------------


def test_criterion_3_products():
    with Timer(3, 5.0):
        su3 = build_algebra("A2")
        check(3, "SU(3) s1^3 = 0", not su3.power(su3.sigma("1"), 3))
        check(3, "SU(3) s2^3 = 0", not su3.power(su3.sigma("2"), 3))
        su4 = build_algebra("A3", 3)
        a = su4.parse_class("s[2321] + s[1232] + 2*s[2132] + 2*s[1213]")
        b = su4.parse_class("s[21] + s[23]")
        check(3, "SU(4) mod 3 duality product = s[121321]", su4.multiply(a, b) == su4.sigma("121321"))
        sp2 = build_algebra("C2", 3)
        # under the calibrated labelling the two cubes come out with labels exchanged
        check(3, "Sp(2) cubes with labels exchanged: s1^3 = 2 s121, s2^3 = s212",
              sp2.power(sp2.sigma("1"), 3) == sp2.parse_class("2*s[121]")
              and sp2.power(sp2.sigma("2"), 3) == sp2.parse_class("s[212]"))
    all_passed(3)


@pytest.mark.xfail(strict=True, reason=(
    "The Sp(2) image table forces s1 to be the long-root reflection, while the quoted cubes "
    "force s1 to be the short one; no labelling satisfies both, and the image tables win."
))
def test_criterion_3_sp2_cubes_as_published():
    sp2 = build_algebra("C2", 3)
    ok1 = check(3, "Sp(2) s1^3 = s121 (as published)", sp2.power(sp2.sigma("1"), 3) == sp2.sigma("121"))
    ok2 = check(3, "Sp(2) s2^3 = 2 s212 (as published)", sp2.power(sp2.sigma("2"), 3) == sp2.parse_class("2*s[212]"))
    assert ok1 and ok2


# -- 4 -----------------------------------------------------------------------------


def _arrows(t, p):
    alg = build_algebra(t, p)
    summands = image_summands(load_bundled(t, p), alg, build_action(alg))
    return {i: [(a.source, a.target) for a in s.arrows if a.rank] for i, s in enumerate(summands, 1)}


def test_criterion_4_steenrod():
    with Timer(4, 10.0):
        su3 = build_algebra("A2", 2)
        check(4, "SU(3) Sq2(s1) = s21", su3.steenrod(su3.sigma("1")) == su3.sigma("21"))
        check(4, "SU(3) Sq2(s2) = s12", su3.steenrod(su3.sigma("2")) == su3.sigma("12"))
        for t, p in (("A2", 3), ("A3", 5)):
            alg = build_algebra(t, p)
            check(4, f"{t} p={p}: P1 = 0", all(not alg.steenrod(alg.sigma(w)) for w in alg.W))
        sp2 = build_algebra("C2", 3)
        check(4, "Sp(2) p=3: P1(s1) != 0 != P1(s2)", sp2.steenrod(sp2.sigma("1")) and sp2.steenrod(sp2.sigma("2")))
        for key, table in ARROW_TABLES.items():
            got = _arrows(*key)
            check(4, f"{key[0]} p={key[1]} arrow table", all(got[i] == table.get(i, []) for i in got))
    all_passed(4)


# -- 5 -----------------------------------------------------------------------------

VERIFY_CASES = [("A2", 2), ("A2", 3), ("A3", 3), ("C2", 3), ("C2", 5), ("G2", 2), ("G2", 3), ("G2", 5), ("G2", 7)]


def test_criterion_5_verification():
    with Timer(5, 10.0):
        for t, p in VERIFY_CASES:
            system = load_bundled(t, p)
            rep = verify_system(system.elements)
            check(5, f"{t} p={p} ({len(system)} elements) ring level", all(rep["ring_level"].values()))
        check(5, "SU(4) p=3 has 8 elements", len(load_bundled("A3", 3)) == 8)
    all_passed(5)


# -- 6 -----------------------------------------------------------------------------

# printed entries that do not span the computed images (index into IMAGE_TABLES rows)
KNOWN_IMAGE_MISMATCHES = {("A3", 3): (5, 8)}


def _image_checks():
    out = []
    for (t, p), table in sorted(IMAGE_TABLES.items()):
        alg = build_algebra(t, p)
        act = build_action(alg)
        for i, (c, classes) in enumerate(zip(load_bundled(t, p), table), 1):
            out.append(((t, p), i, span_equal(alg, act.image(c, alg), classes)))
    return out


def test_criterion_6_images():
    with Timer(6, 10.0):
        results = _image_checks()
    for key, i, ok in results:
        if i in KNOWN_IMAGE_MISMATCHES.get(key, ()):
            continue
        check(6, f"{key[0]} p={key[1]} V{i}", ok)
    all_passed(6)


@pytest.mark.xfail(strict=True, reason=(
    "SU(4) p=3: the printed V5 and V8 each differ from the computed image in one Schubert "
    "index; the printed vectors also violate the stated duality pairing, the computed ones do not."
))
def test_criterion_6_su4_v5_v8_as_published():
    alg = build_algebra("A3", 3)
    act = build_action(alg)
    system = load_bundled("A3", 3)
    oks = []
    for i in KNOWN_IMAGE_MISMATCHES[("A3", 3)]:
        ok = span_equal(alg, act.image(system.elements[i - 1], alg), IMAGE_TABLES[("A3", 3)][i - 1])
        oks.append(check(6, f"A3 p=3 V{i} (as published)", ok))
    assert all(oks)


def test_su4_v5_v8_corrected_entries_and_pairing_evidence():
    # the computed images differ from the printed ones in exactly one Schubert index each
    alg = build_algebra("A3", 3)
    act = build_action(alg)
    c = load_bundled("A3", 3).elements
    v5 = list(IMAGE_TABLES[("A3", 3)][4])
    v5[1] = "s[13] + s[21] + s[23]"
    v8 = list(IMAGE_TABLES[("A3", 3)][7])
    v8[2] = "s[321] + 2*s[132] + s[123]"
    assert span_equal(alg, act.image(c[4], alg), v5)
    assert span_equal(alg, act.image(c[7], alg), v8)

    # Poincare pairing of a degree-2 (resp. degree-6) vector against the complementary degree of each printed table
    def partners(text, k):
        x = alg.parse_class(text)
        out = []
        for j, table in enumerate(IMAGE_TABLES[("A3", 3)], 1):
            for other in table:
                y = alg.parse_class(other)
                if y.degrees() == [alg.N - k] and alg.multiply(x, y).coefficient(alg.W.w0):
                    out.append(j)
        return sorted(set(out))

    assert partners("s[12] + s[13] + s[23]", 2) == [3, 5, 6]
    assert partners("s[13] + s[21] + s[23]", 2) == [4]
    assert partners("s[321] + 2*s[132] + s[213]", 3) == [2, 3, 6, 8]
    assert partners("s[321] + 2*s[132] + s[123]", 3) == [3, 8]


# -- 7 -----------------------------------------------------------------------------

WEDGE_CRITERIA = [
    ("A2", 2, True, "S^7 v SCP2 v SCP2"),
    ("A2", 3, True, "S^3 v S^3 v S^5 v S^5 v S^7"),
    ("A2", 5, False, "S^3 v S^3 v S^5 v S^5 v S^7"),
    ("A2", 7, False, "S^3 v S^3 v S^5 v S^5 v S^7"),
    ("A3", 3, True, "3A(3,7) v 3S^5 v 3A(7,11) v 3S^9 v 2A(5,9) v S^13"),
    ("A3", 5, False, "3S^3 v 5S^5 v 6S^7 v 5S^9 v 3S^11 v S^13"),
    ("C2", 3, True, "2A(3,7) v 2S^5 v S^9"),
    ("C2", 5, True, "2S^3 v 2S^5 v 2S^7 v S^9"),
    ("C2", 7, True, "2S^3 v 2S^5 v 2S^7 v S^9"),
    ("G2", 5, True, "2S^5 v 2S^7 v 2S^9 v S^13 v 2A(3,11)"),
    ("G2", 7, True, "2S^3 v 2S^5 v 2S^7 v 2S^9 v 2S^11 v S^13"),
]


def test_criterion_7_wedge_strings():
    with Timer(7, 30.0):
        for t, p, bundled, expected in WEDGE_CRITERIA:
            system = load_bundled(t, p) if bundled else None
            report = wedge_report(t, p, system, adams=True, assume_top_cell_splits=(t, p) == ("A3", 3))
            check(7, f"{t} p={p}: {expected}", parse_wedge_string(report.string) == parse_wedge_string(expected))
        g2 = wedge_report("G2", 2, load_bundled("G2", 2), adams=True)
        check(7, "G2 p=2: every summand unnamed", all(l.kind == "composite" for l in g2.labels))
        g3 = wedge_report("G2", 3, load_bundled("G2", 3), adams=True)
        check(7, "G2 p=3: A(5,9) and three unnamed summands", g3.string == "A(5,9) v Tel(c2) v Tel(c3) v Tel(c4)")
    all_passed(7)


# -- 8 -----------------------------------------------------------------------------

PAIR_CRITERIA = [
    ("C2", 3, [(1, 2), (3, 6), (4, 5)]),
    ("C2", 5, [(1, 2), (3, 6), (4, 5)]),
    ("C2", 7, [(1, 2), (3, 6), (4, 5)]),
    ("G2", 5, [(1, 2), (3, 4), (5, 6), (7, 8)]),
    ("G2", 7, [(1, 2), (3, 4), (5, 6), (7, 8)]),
    ("A3", 3, [(1, 2), (3, 8), (4, 5), (6, 7)]),
]


def test_criterion_8_dual_pairs():
    with Timer(8, 10.0):
        for t, p, expected in PAIR_CRITERIA:
            alg = build_algebra(t, p)
            check(8, f"{t} p={p} pairs {expected}", dual_pairs(load_bundled(t, p).elements, alg) == expected)
    all_passed(8)


# -- 9 -----------------------------------------------------------------------------


def _monomials(n, max_deg):
    return [m for m in product(range(max_deg + 1), repeat=n) if sum(m) <= max_deg]


def _braid_ok(t):
    alg = build_algebra(t)
    d = alg.datum
    m = {"C2": 4, "G2": 6}.get(t)
    ok = True
    for mono in _monomials(d.num_vars, alg.N):
        f = Poly(d.num_vars, {mono: 1})
        for i in range(1, d.rank + 1):
            ok &= not divided_difference(d, i, divided_difference(d, i, f))
            for j in range(i + 1, d.rank + 1):
                length = m or (3 if j == i + 1 else 2)
                left, right = f, f
                for step in range(length):
                    left = divided_difference(d, (j, i)[step % 2], left)
                    right = divided_difference(d, (i, j)[step % 2], right)
                ok &= left == right
    return ok


def test_criterion_9_properties():
    rng = random.Random(0)
    for t in ("A2", "A3", "C2", "G2"):
        check(9, f"{t} divided-difference braid relations", _braid_ok(t))
    for t in ("A1", "A2", "A3", "C2", "G2"):
        act = build_action(build_algebra(t))
        check(9, f"{t} action matrices integral", all(
            isinstance(x, int) for w in act.W for k in range(act.N + 1) for r in act.matrix(w, k) for x in r))
    for t in ("A2", "C2"):
        act = build_action(build_algebra(t))
        W = act.W
        check(9, f"{t} ring automorphism (all triples)", all(
            ring_automorphism_holds(act, w, u, v) for w in W for u in W for v in W if u.length + v.length <= act.N))
    for t in ("A3", "G2"):
        act = build_action(build_algebra(t))
        W = act.W
        triples = [(W[rng.randrange(len(W))], W[rng.randrange(len(W))], W[rng.randrange(len(W))]) for _ in range(300)]
        check(9, f"{t} ring automorphism (300 sampled triples)", all(ring_automorphism_holds(act, *x) for x in triples))
    for t, p in (("A2", 2), ("A2", 3), ("A3", 2), ("A3", 3), ("A3", 5), ("C2", 3), ("C2", 5), ("C2", 7), ("G2", 3), ("G2", 5), ("G2", 7)):
        alg = build_algebra(t, p)
        act = build_action(alg)
        check(9, f"{t} p={p} Steenrod naturality", all(steenrod_commutes(act, alg, w, v) for w in alg.W for v in alg.W))
    alg = build_algebra("G2", 2)
    act = build_action(alg)
    res = [steenrod_commutes(act, alg, w, v) for w in alg.W for v in alg.W]
    check(9, "G2 p=2 Steenrod naturality where defined", False not in res)
    for t, p in VERIFY_CASES + [("A3", 2), ("C2", 7)]:
        alg = build_algebra(t, p)
        summands = image_summands(load_bundled(t, p), alg, build_action(alg))
        check(9, f"{t} p={p} direct-sum dimensions", sum(s.total_dim for s in summands) == len(alg.W) - 1)
    for t in ("A1", "A2", "A3", "C2", "G2"):
        W = enumerate_weyl(build_root_datum(t))
        check(9, f"{t} Bruhat order = subword order", all(
            W.bruhat_leq(v, w) == subword_bruhat_leq(W, v, w) for v in W for w in W))
    all_passed(9)


# -- 10 ----------------------------------------------------------------------------


def test_criterion_10_search():
    with Timer(10, 60.0):
        A2 = build_algebra("A2", 3).W
        found = search_idempotents([parse_gr(x, 3, A2) for x in ("1", "s[121]")], 3, budget=DEFAULT_BUDGET)
        check(10, "SU(3) p=3 system recovered", set(found[0].elements) == set(load_bundled("A2", 3).elements))
        G2 = build_algebra("G2", 3).W
        span = [parse_gr(x, 3, G2) for x in ("1", "s[1]", "s[21212]", "s[121212]")]
        found = search_idempotents(span, 3, budget=DEFAULT_BUDGET)
        check(10, "G2 p=3 system recovered", set(found[0].elements) == set(load_bundled("G2", 3).elements))
    all_passed(10)
