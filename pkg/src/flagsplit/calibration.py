"""Calibration of the free conventions against reference image tables.

Two choices are not fixed by the mathematics alone: which simple reflection
of C2 and G2 is called s_1, and whether w acts through its own matrix or
through that of w^{-1}.  Each candidate is scored by how many reference
images it reproduces; :func:`calibrate` returns the best one per type.
"""

from __future__ import annotations

from itertools import permutations

from . import linalg
from .action import CONVENTIONS, ActionMatrixSet
from .coinvariant import CoinvariantAlgebra, schubert_model
from .groupring import parse_gr

# (type, prime) -> list of (idempotent, spanning classes of its image)
REFERENCE_IMAGES = {
    ("A2", 2): [
        ("1 + s[12] + s[21]", ["1", "s[121]"]),
        ("1 + s[2] + s[21] + s[121]", ["s[1] + s[2]", "s[12] + s[21]"]),
        ("1 + s[2] + s[12] + s[121]", ["s[1]", "s[21]"]),
    ],
    ("C2", 3): [
        ("1/8*(1 + s[1] - s[2] - s[12] - s[21] - s[121] + s[212] + s[1212])", ["s[12]"]),
        ("1/8*(1 - s[1] + s[2] - s[12] - s[21] + s[121] - s[212] + s[1212])", ["s[21]"]),
        ("1/4*(1 - s[1] + s[212] - s[1212])", ["s[1] - s[2]", "s[121] + s[212]"]),
        ("1/4*(1 + s[1] - s[212] - s[1212])", ["s[2]", "s[212]"]),
    ],
    ("G2", 3): [
        ("1 + s[1] + s[21212] + s[121212]", ["1", "s[12]", "s[1212]"]),
        ("1 - s[1] + s[21212] - s[121212]", ["s[1] + s[2]", "s[121]", "s[12121] - s[21212]"]),
    ],
    ("G2", 5): [
        ("1/6*(1 - s[1] - s[2] + s[21] - s[1212] + s[12121] + s[21212] - s[121212])", ["3*s[1] - 2*s[2]", "3*s[12121] + 2*s[21212]"]),
        ("1/6*(1 + s[1] + s[2] + s[12] - s[2121] - s[12121] - s[21212] - s[121212])", ["s[2]", "s[21212]"]),
    ],
}


def image_matches(alg: CoinvariantAlgebra, action: ActionMatrixSet, element: str, span: list[str]) -> bool:
    c = parse_gr(element, alg.p, alg.W)
    target: dict[int, list] = {}
    for text in span:
        cls = alg.parse_class(text)
        for k in cls.degrees():
            target.setdefault(k, []).append(cls.vector(k))
    im = action.image(c, alg)
    return all(linalg.same_span(im[k], target.get(k, []), alg.field) for k in range(alg.N + 1))


def score(type_tag: str, labeling, convention: str) -> tuple[int, int]:
    """(matches, total) over the reference images of one type."""
    model = schubert_model(type_tag, labeling)
    action = ActionMatrixSet(model, convention)
    hits = total = 0
    for (t, p), rows in REFERENCE_IMAGES.items():
        if t != type_tag:
            continue
        alg = CoinvariantAlgebra(model, p)
        for element, span in rows:
            total += 1
            hits += image_matches(alg, action, element, span)
    return hits, total


def calibrate() -> dict:
    """Best (labeling, convention) per type; the A2 tables alone decide the convention."""
    out = {}
    conv_scores = {c: score("A2", None, c) for c in CONVENTIONS}
    convention = max(CONVENTIONS, key=lambda c: conv_scores[c][0])
    out["convention"] = convention
    out["convention_scores"] = conv_scores
    for t in ("C2", "G2"):
        scores = {lab: score(t, lab, convention) for lab in permutations(range(2))}
        best = max(sorted(scores), key=lambda lab: scores[lab][0])
        out[t] = {"labeling": best, "scores": scores}
    return out
