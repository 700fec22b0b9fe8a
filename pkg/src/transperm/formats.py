"""Text and JSON serialization for permutations, words, splits, and chains.

Text grammar (whitespace-insensitive between tokens):

    affine k=<K> w=[<w0>,<w1>,...]
    fin chi=<C> lo=<L> v=[<v0>,...]        (empty v means iota_C)
    id@<k>   iota<n>@<k>   s<m>@<k>        (shorthands)
    word k=<K> [m1,m2,...]                 (_ is the identity letter)
    split k=<K> e=[e1,...,ek]
    chain k=<K> [d=<d1>:<G|T m1>, ...]
"""

from __future__ import annotations

import re

from .errors import FormatError
from .perm import Perm, identity, inv_count, iota, make_affine, make_finitary, sigma

_INT = r"-?\d+"
_LIST = r"\[\s*((?:-?\d+\s*(?:,\s*-?\d+\s*)*)?)\]"


def _ints(body: str):
    body = body.strip()
    if not body:
        return []
    return [int(t) for t in body.split(",")]


def format_perm(p: Perm) -> str:
    k = p.period
    if p.is_identity():
        return f"id@{k}"
    n = inv_count(p)
    if n == 0:
        return f"iota{p.chi}@{k}"
    if p.chi == 0 and n == 1:
        cands = range(k) if k else [p.lo]
        for m in cands:
            if p == sigma(m, k):
                return f"s{m}@{k}"
    if k:
        return f"affine k={k} w=[{','.join(map(str, p.window))}]"
    return f"fin chi={p.chi} lo={p.lo} v=[{','.join(map(str, p.vals))}]"


def parse_perm(text: str) -> Perm:
    t = text.strip()
    m = re.fullmatch(r"id@(\d+)", t)
    if m:
        return identity(int(m.group(1)))
    m = re.fullmatch(rf"iota({_INT})@(\d+)", t)
    if m:
        return iota(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(rf"s({_INT})@(\d+)", t)
    if m:
        return sigma(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(rf"affine\s+k\s*=\s*(\d+)\s+w\s*=\s*{_LIST}", t)
    if m:
        return make_affine(int(m.group(1)), _ints(m.group(2)))
    m = re.fullmatch(
        rf"fin\s+chi\s*=\s*({_INT})\s+lo\s*=\s*({_INT})\s+v\s*=\s*{_LIST}", t
    )
    if m:
        return make_finitary(int(m.group(1)), int(m.group(2)), _ints(m.group(3)))
    raise FormatError(f"unparseable permutation: {text!r}")


def perm_to_json(p: Perm) -> dict:
    if p.period:
        return {"period": p.period, "window": list(p.window)}
    return {"period": 0, "chi": p.chi, "lo": p.lo, "vals": list(p.vals)}


def perm_from_json(obj) -> Perm:
    try:
        if obj["period"]:
            return make_affine(obj["period"], obj["window"])
        return make_finitary(obj["chi"], obj["lo"], obj["vals"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad permutation object: {obj!r}") from exc


def format_word(period: int, letters) -> str:
    body = ",".join("_" if m is None else str(m) for m in letters)
    return f"word k={period} [{body}]"


def parse_word(text: str):
    m = re.fullmatch(
        r"word\s+k\s*=\s*(\d+)\s+\[\s*((?:(?:-?\d+|_)\s*(?:,\s*(?:-?\d+|_)\s*)*)?)\]",
        text.strip(),
    )
    if not m:
        raise FormatError(f"unparseable word: {text!r}")
    k = int(m.group(1))
    body = m.group(2).strip()
    letters = []
    if body:
        for tok in body.split(","):
            tok = tok.strip()
            letters.append(None if tok == "_" else int(tok))
    return k, tuple(letters)


def format_split(k: int, entries) -> str:
    return f"split k={k} e=[{','.join(map(str, entries))}]"


def parse_split(text: str):
    m = re.fullmatch(rf"split\s+k\s*=\s*(\d+)\s+e\s*=\s*{_LIST}", text.strip())
    if not m:
        raise FormatError(f"unparseable splitting type: {text!r}")
    return int(m.group(1)), tuple(_ints(m.group(2)))


def format_chain(k: int, components) -> str:
    """components: sequence of (degree, cls) with cls None (generic) or int."""
    parts = []
    for d, cls in components:
        tag = "G" if cls is None else f"T {cls}"
        parts.append(f"d={d}:{tag}")
    return f"chain k={k} [{', '.join(parts)}]"


def parse_chain(text: str):
    m = re.fullmatch(r"chain\s+k\s*=\s*(\d+)\s+\[\s*(.*?)\s*\]", text.strip())
    if not m:
        raise FormatError(f"unparseable chain: {text!r}")
    k = int(m.group(1))
    body = m.group(2).strip()
    comps = []
    if body:
        for part in body.split(","):
            pm = re.fullmatch(
                rf"\s*d\s*=\s*({_INT})\s*:\s*(?:(G)|T\s*({_INT}))\s*", part
            )
            if not pm:
                raise FormatError(f"unparseable chain component: {part!r}")
            d = int(pm.group(1))
            cls = None if pm.group(2) else int(pm.group(3))
            comps.append((d, cls))
    return k, comps
