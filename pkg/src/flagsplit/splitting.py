"""From an idempotent system to the wedge decomposition of the suspended flag manifold.

Telescopes are represented only through their reduced mod-p cohomology and
the Steenrod operation restricted to it.  A summand is identified when that
data determines its stable type: two-cell complexes joined by Sq^2 or P^1,
spheres, or a point.  Everything else is reported as a composite and left
unnamed.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__, linalg
from .action import ActionMatrixSet, build_action
from .coinvariant import CoinvariantAlgebra, SteenrodUnknown, build_algebra
from .groupring import GroupRingElement, IdempotentSystem, format_gr, verify_system
from .linalg import GF


class SplittingError(RuntimeError):
    pass


@dataclass
class Arrow:
    """Steenrod operation between two cohomological degrees of G/T, restricted to a summand."""

    source: int
    target: int
    rank: int | None  # None: some value of the operation is unknown

    @property
    def indeterminate(self) -> bool:
        return self.rank is None

    def to_dict(self) -> dict:
        return {"source": self.source, "target": self.target, "rank": self.rank}


@dataclass
class GradedSummand:
    """Image of one idempotent (possibly cut down to one degree class) in H*(G/T; F_p)."""

    p: int
    pieces: dict[int, list[list[int]]]  # half-degree k -> basis rows in Schubert coordinates
    provenance: str
    arrows: list[Arrow] = field(default_factory=list)

    @property
    def half_degrees(self) -> list[int]:
        return sorted(k for k, b in self.pieces.items() if b)

    def dim(self, k: int) -> int:
        return len(self.pieces.get(k, []))

    @property
    def total_dim(self) -> int:
        return sum(len(b) for b in self.pieces.values())

    def cells(self) -> list[int]:
        """Cell dimensions of the telescope: cohomological degree in G/T plus one."""
        return [2 * k + 1 for k in self.half_degrees for _ in self.pieces[k]]

    def to_dict(self, alg: CoinvariantAlgebra | None = None) -> dict:
        out = {
            "provenance": self.provenance,
            "cells": self.cells(),
            "arrows": [a.to_dict() for a in self.arrows],
        }
        if alg is not None:
            out["basis"] = {
                str(2 * k): [format_vector(alg, k, row) for row in self.pieces[k]] for k in self.half_degrees
            }
        return out


def format_vector(alg: CoinvariantAlgebra, k: int, row: Sequence) -> str:
    return str(alg.from_vector(k, row))


# -- images -------------------------------------------------------------------------


def full_images(system: Sequence[GroupRingElement], alg: CoinvariantAlgebra, action: ActionMatrixSet) -> list[dict[int, list[list[int]]]]:
    """Per idempotent, the image in every degree including H^0."""
    return [action.image(c, alg) for c in system]


def image_summands(
    system: IdempotentSystem | Sequence[GroupRingElement],
    alg: CoinvariantAlgebra,
    action: ActionMatrixSet | None = None,
    names: Sequence[str] | None = None,
) -> list[GradedSummand]:
    """Reduced images of each idempotent; raises if they do not add up to H*(G/T; F_p)."""
    action = action or build_action(alg)
    elems = list(system)
    if names is None:
        names = system.names if isinstance(system, IdempotentSystem) else [f"c{i + 1}" for i in range(len(elems))]
    images = full_images(elems, alg, action)
    F = alg.field
    for k in range(alg.N + 1):
        rows = [r for im in images for r in im[k]]
        if len(rows) != alg.dim(k) or linalg.rank(rows, F) != alg.dim(k):
            raise SplittingError(f"images do not form a direct sum in degree {2 * k}")
    out = []
    for name, im in zip(names, images):
        pieces = {k: rows for k, rows in im.items() if k > 0 and rows}
        s = GradedSummand(alg.p, pieces, name)
        s.arrows = steenrod_profile(s, alg)
        out.append(s)
    return out


# -- Steenrod data ---------------------------------------------------------------------


def steenrod_profile(summand: GradedSummand, alg: CoinvariantAlgebra) -> list[Arrow]:
    """Rank of P^1 (Sq^2 at p = 2) on each degree of the summand; unknown values give
    indeterminate arrows."""
    shift = alg.steenrod_shift
    F = alg.field
    arrows = []
    for k in summand.half_degrees:
        t = k + shift
        if t > alg.N:
            continue
        images, unknown = [], False
        for row in summand.pieces[k]:
            try:
                img = alg.steenrod(alg.from_vector(k, row))
            except SteenrodUnknown:
                unknown = True
                break
            images.append(img.vector(t))
        if unknown:
            arrows.append(Arrow(2 * k, 2 * t, None))
            continue
        r = linalg.rank(images, F) if images else 0
        if r:
            target = summand.pieces.get(t, [])
            if linalg.rank(target + images, F) != len(target):
                raise SplittingError(f"{summand.provenance}: Steenrod image leaves the summand")
            arrows.append(Arrow(2 * k, 2 * t, r))
    return arrows


# -- degree classes ---------------------------------------------------------------------


def adams_refine(summand: GradedSummand, p: int, alg: CoinvariantAlgebra | None = None) -> list[GradedSummand]:
    """Split by half-degree residue mod p - 1; a summand in one residue class is returned as is."""
    if p == 2:
        return [summand]
    classes: dict[int, dict[int, list]] = {}
    for k in summand.half_degrees:
        classes.setdefault(k % (p - 1), {})[k] = summand.pieces[k]
    if len(classes) <= 1:
        return [summand]
    out = []
    for r in sorted(classes):
        pieces = classes[r]
        arrows = [a for a in summand.arrows if (a.source // 2) in pieces]
        out.append(GradedSummand(summand.p, pieces, f"{summand.provenance},r{r}", arrows))
    return out


# -- identification -----------------------------------------------------------------------


@dataclass(frozen=True)
class SummandLabel:
    kind: str  # "point" | "sphere" | "cp2" | "moore" | "composite"
    cells: tuple[int, ...]
    name: str = ""

    def __str__(self) -> str:
        if self.kind == "point":
            return "*"
        if self.kind == "sphere":
            return f"S^{self.cells[0]}"
        if self.kind == "cp2":
            k = self.cells[0] - 2
            return "SCP2" if k == 1 else f"S^{k}CP2"
        if self.kind == "moore":
            return f"A({self.cells[0]},{self.cells[1]})"
        return self.name

    def sort_key(self):
        if self.kind == "composite":
            return (1, 0, 0, self.name)
        return (0, self.cells[0] if self.cells else 0, len(self.cells), str(self))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "cells": list(self.cells), "label": str(self)}


def _decidable(half_degrees: list[int], p: int) -> bool:
    # Stable p-primary stems below the alpha_2 stem (4p - 5) only contain alpha_1;
    # at p = 2 only eta (stem 1) is detected by the data we have.
    degs = [2 * k for k in half_degrees]
    for a in degs:
        for b in degs:
            d = abs(a - b)
            if p == 2 and d not in (0, 2):
                return False
            if p > 2 and d >= 4 * p - 4:
                return False
    return True


def identify(summand: GradedSummand, p: int, top_half_degree: int, assume_top_cell_splits: bool = False) -> list[SummandLabel]:
    """Wedge factors of one summand, or a single composite label."""
    pieces = {k: len(v) for k, v in summand.pieces.items() if v}
    arrows = list(summand.arrows)
    labels: list[SummandLabel] = []
    if not pieces:
        return [SummandLabel("point", ())]
    if assume_top_cell_splits and pieces.get(top_half_degree):
        into_top = [a for a in arrows if a.target == 2 * top_half_degree and (a.rank is None or a.rank)]
        if not into_top:
            labels.append(SummandLabel("sphere", (2 * top_half_degree + 1,)))
            del pieces[top_half_degree]
            if not pieces:
                return labels
    ks = sorted(pieces)
    if any(a.indeterminate for a in arrows if a.source // 2 in pieces) or not _decidable(ks, p):
        cells = tuple(2 * k + 1 for k in ks for _ in range(pieces[k]))
        return labels + [SummandLabel("composite", cells, f"Tel({summand.provenance})")]
    # decidable summands span fewer than two arrow lengths, so arrows cannot chain
    remaining = dict(pieces)
    for a in arrows:
        if not a.rank or a.source // 2 not in pieces:
            continue
        s, t = a.source // 2, a.target // 2
        for _ in range(a.rank):
            if p == 2:
                labels.append(SummandLabel("cp2", (2 * s + 1, 2 * t + 1)))
            else:
                labels.append(SummandLabel("moore", (2 * s + 1, 2 * t + 1)))
        remaining[s] -= a.rank
        remaining[t] -= a.rank
    for k in ks:
        labels.extend(SummandLabel("sphere", (2 * k + 1,)) for _ in range(remaining[k]))
    return labels


# -- reports --------------------------------------------------------------------------------


def canonical_string(labels: Sequence[SummandLabel]) -> str:
    """``3A(3,7) v 3S^5 v S^13``: equal labels merged, points dropped, composites last."""
    counts = Counter(l for l in labels if l.kind != "point")
    if not counts:
        return "*"
    parts = []
    for label in sorted(counts, key=lambda l: l.sort_key()):
        n = counts[label]
        parts.append(f"{n}{label}" if n > 1 else str(label))
    return " v ".join(parts)


def parse_wedge_string(text: str) -> Counter:
    """Multiset of factors in a wedge string; accepts "v" or the wedge sign and multiplicities."""
    import re

    norm = text.replace("∨", " v ").replace("\\vee", " v ")
    out: Counter = Counter()
    for part in re.split(r"\s+v\s+", norm.strip()):
        part = part.strip().replace(" ", "")
        if not part:
            continue
        m = re.fullmatch(r"(\d*)(.*)", part)
        n = int(m.group(1)) if m.group(1) else 1
        body = m.group(2)
        body = re.sub(r"\^\{(\d+)\}", r"^\1", body)
        body = body.replace("ΣCP²", "SCP2").replace("ΣCP2", "SCP2")
        out[body] += n
    return out


@dataclass
class WedgeReport:
    type_tag: str
    p: int
    options: dict
    system: list[tuple[str, str]]
    summands: list[tuple[GradedSummand, list[SummandLabel]]]
    verification: dict

    @property
    def labels(self) -> list[SummandLabel]:
        return [l for _, ls in self.summands for l in ls]

    @property
    def string(self) -> str:
        return canonical_string(self.labels)

    def to_dict(self, alg: CoinvariantAlgebra | None = None) -> dict:
        return {
            "tool": "flagsplit",
            "version": __version__,
            "type": self.type_tag,
            "prime": self.p,
            "options": self.options,
            "system": [{"name": n, "element": e} for n, e in self.system],
            "verification": self.verification,
            "summands": [
                dict(s.to_dict(alg), labels=[l.to_dict() for l in ls]) for s, ls in self.summands
            ],
            "wedge": self.string,
        }

    def to_json(self, alg: CoinvariantAlgebra | None = None) -> str:
        return json.dumps(self.to_dict(alg), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"type {self.type_tag}, p = {self.p}"]
        for s, ls in self.summands:
            arrows = ", ".join(
                f"H^{a.source}->H^{a.target}" + ("?" if a.rank is None else (f" (rank {a.rank})" if a.rank > 1 else ""))
                for a in s.arrows
            )
            lines.append(
                f"  Tel({s.provenance}): cells {s.cells() or '-'}"
                + (f"; arrows {arrows}" if arrows else "")
                + f"  =>  {canonical_string(ls)}"
            )
        lines.append(f"wedge: {self.string}")
        return "\n".join(lines)


def unit_system(alg: CoinvariantAlgebra) -> IdempotentSystem:
    return IdempotentSystem([GroupRingElement.unit(alg.W, alg.p)], ["c1"])


def wedge_report(
    type_tag: str,
    p: int,
    system: IdempotentSystem | None = None,
    adams: bool = False,
    assume_top_cell_splits: bool = False,
) -> WedgeReport:
    alg = build_algebra(type_tag, p)
    action = build_action(alg)
    system = system or unit_system(alg)
    verification = verify_system(system.elements, alg, action)
    if not verification["pass"]:
        raise SplittingError("idempotent system fails verification")
    summands = image_summands(system, alg, action)
    if adams:
        summands = [piece for s in summands for piece in adams_refine(s, p, alg)]
    rows = [(s, identify(s, p, alg.N, assume_top_cell_splits)) for s in summands]
    return WedgeReport(
        type_tag=alg.datum.type_tag,
        p=p,
        options={"adams": adams, "assume_top_cell_splits": assume_top_cell_splits},
        system=[(n, format_gr(e)) for n, e in zip(system.names, system.elements)],
        summands=rows,
        verification=verification,
    )


# -- Poincare duality between summands ---------------------------------------------------


def dual_pairs(
    system: Sequence[GroupRingElement], alg: CoinvariantAlgebra, action: ActionMatrixSet | None = None
) -> list[tuple[int, int]]:
    """1-based pairs (i, j), i <= j, whose images pair perfectly into the top class.

    Supports must be complementary degree by degree and the top coefficient of
    the products must form an invertible matrix in each degree.
    """
    action = action or build_action(alg)
    images = full_images(list(system), alg, action)
    F = GF(alg.p)
    N = alg.N
    top = alg.W.w0

    def pairing_matrix(a_rows, ka, b_rows, kb):
        return [
            [alg.multiply(alg.from_vector(ka, r), alg.from_vector(kb, s)).coefficient(top) for s in b_rows]
            for r in a_rows
        ]

    out = []
    for i, a in enumerate(images):
        for j in range(i, len(images)):
            b = images[j]
            ok = any(a[k] for k in a)
            for k in range(N + 1):
                if len(a[k]) != len(b[N - k]):
                    ok = False
                    break
                if a[k] and linalg.rank(pairing_matrix(a[k], k, b[N - k], N - k), F) != len(a[k]):
                    ok = False
                    break
            if ok:
                out.append((i + 1, j + 1))
    return out
