"""Small shared helpers for deterministic plain-text rendering."""

from __future__ import annotations

from .coeff import CycNum


def coeff_prefix(c: CycNum, symbol: str) -> str:
    """Render coeff*symbol, folding unit coefficients into the symbol."""
    s = str(c)
    if s == "1":
        return symbol
    if s == "-1":
        return f"-{symbol}"
    if "+" in s or "-" in s[1:]:
        s = f"({s})"
    return f"{s}*{symbol}"


def join_terms(items) -> str:
    """Join (coeff, symbol) pairs as a signed sum; empty means zero."""
    if not items:
        return "0"
    rendered = [coeff_prefix(c, sym) for c, sym in items]
    out = rendered[0]
    for part in rendered[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out
