"""Univariate polynomials over ``F_p`` as elements over the monoid ``(N, +)``.

Polynomials are dense coefficient lists, lowest degree first, without
trailing zeros (the zero polynomial is ``[]``).  The string form is the one
used by the command line and element files, e.g. ``"x^3+2x+1"``.
"""

from __future__ import annotations

import re

from .categories import NAT
from .linalg import inv_mod
from .modules import ModElement, Monomial

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(x(?:\s*\^\s*(\d+))?)?")


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def parse_poly(text: str, p: int) -> list[int]:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign, num, var, exp = m.groups()
        if not num and not var:
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        if pos > 0 and not sign:
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        d = (int(exp) if exp else 1) if var else 0
        coeffs[d] = coeffs.get(d, 0) + c
        pos = m.end()
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c % p
    return trim(out)


def format_poly(a: list[int]) -> str:
    if not a:
        return "0"
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if not c:
            continue
        if d == 0:
            parts.append(str(c))
            continue
        mono = "x" if d == 1 else f"x^{d}"
        parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts)


def degree(a: list[int]) -> int:
    return len(a) - 1


def poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = inv_mod(b[-1], p)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] * inv % p
        q[shift] = c
        for i, bc in enumerate(b):
            r[i + shift] = (r[i + shift] - c * bc) % p
        trim(r)
    return trim(q), r


def poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd (``[]`` when both inputs are zero)."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if not a:
        return []
    inv = inv_mod(a[-1], p)
    return [c * inv % p for c in a]


def poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def gcd_member(v: list[int], gens: list[list[int]], p: int) -> bool:
    """Ideal membership in ``F_p[x]`` via divisibility by the gcd of the generators."""
    g: list[int] = []
    for a in gens:
        g = poly_gcd(g, a, p)
    if not g:
        return not trim(list(v))
    return not poly_divmod(v, g, p)[1]


def to_element(a: list[int], p: int, k: int = 1, coord: int = 1) -> ModElement:
    terms = {Monomial(d, coord): c for d, c in enumerate(a) if c % p}
    return ModElement(NAT, 0, 0, k, p, terms)


def from_element(v: ModElement) -> list[int]:
    if v.cat is not NAT:
        raise ValueError("not a polynomial element")
    if not v.terms:
        return []
    out = [0] * (max(m.morphism for m in v.terms) + 1)
    for m, c in v.terms.items():
        out[m.morphism] = c
    return trim(out)


def poly(text: str, p: int) -> ModElement:
    return to_element(parse_poly(text, p), p)
