"""Published idempotent systems, one text file per (type, prime)."""

from __future__ import annotations

from importlib import resources

from ..rootweyl import canonical_type


def available() -> list[tuple[str, int]]:
    out = []
    for f in resources.files(__name__).iterdir():
        if f.name.endswith(".txt"):
            t, p = f.name[:-4].split("_p")
            out.append((t, int(p)))
    return sorted(out)


def bundled_text(type_tag: str, p: int) -> str:
    name = f"{canonical_type(type_tag)}_p{p}.txt"
    f = resources.files(__name__).joinpath(name)
    if not f.is_file():
        raise FileNotFoundError(f"no bundled system for {canonical_type(type_tag)} at p = {p}")
    return f.read_text(encoding="utf-8")


def load_bundled(type_tag: str, p: int):
    from ..coinvariant import build_algebra
    from ..groupring import read_systems

    alg = build_algebra(type_tag, p)
    [system] = read_systems(bundled_text(type_tag, p), p, alg.W)
    return system
