"""Exact sparse linear combinations over the rationals.

Coefficients are ``fractions.Fraction`` values, so everything in this
package is exact: a zero result is a proof of cancellation, never a
numerical statement.

A combination ("combo") is a plain dict mapping keys to nonzero Fraction
coefficients.  The empty dict is the zero combination.  Keys must be
totally ordered (tuples of ints, or ints, throughout this package) so
terms can be listed in a canonical order.  Constructors and operations
return combos in canonical form and never mutate their arguments; treat
combos as immutable values once built.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Rational = Fraction

# A combo is dict[K, Fraction] with no zero values, for totally ordered K.
Combo = dict


def combo(terms: Mapping | Iterable[tuple] = ()) -> Combo:
    """Build a combo in canonical form.

    Accepts a mapping or an iterable of (key, coefficient) pairs.
    Duplicate keys are folded together, coefficients are coerced to
    Fraction, and keys whose total coefficient is zero are dropped.
    """
    items = terms.items() if isinstance(terms, Mapping) else terms
    out: Combo = {}
    for key, value in items:
        c = Fraction(value)
        if not c:
            continue
        total = out.get(key, 0) + c
        if total:
            out[key] = total
        elif key in out:
            del out[key]
    return out


def combo_add(a: Combo, b: Combo) -> Combo:
    """Termwise sum; terms that cancel disappear."""
    out = dict(a)
    for key, c in b.items():
        total = out.get(key, 0) + c
        if total:
            out[key] = total
        elif key in out:
            del out[key]
    return out


def combo_scale(a: Combo, c) -> Combo:
    """Multiply every coefficient by c; the zero scalar empties the combo."""
    c = Fraction(c)
    if not c:
        return {}
    return {key: coeff * c for key, coeff in a.items()}


def combo_sorted_items(a: Combo) -> list[tuple]:
    """Terms sorted by key, the canonical order for rendering."""
    return sorted(a.items(), key=lambda kv: kv[0])
