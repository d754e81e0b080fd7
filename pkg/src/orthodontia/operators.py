"""Difference operators on polynomials.

Four families, all indexed by j in [n-1] and built on one kernel:

- divided difference:   d_j(f) = (f - s_j.f) / (x_j - x_{j+1})
- Demazure:             pi_j(f) = d_j(x_j f)
- isobaric:             ibar_j(f) = d_j((1 - x_{j+1}) f)
- Demazure-Lascoux:     pibar_j(f) = d_j(x_j (1 - x_{j+1}) f)

Everything goes through the exact-division kernel rather than
per-monomial closed forms; the closed forms live in the test suite as an
independent oracle.  All operators are stateless pure functions.
"""

from __future__ import annotations

from orthodontia.polynomial import Polynomial, exact_divide_linear


def divided_difference(j: int, f: Polynomial) -> Polynomial:
    """(f - s_j.f) / (x_j - x_{j+1}); lowers degree by one, kills symmetric input."""
    return exact_divide_linear(f - f.swap_variables(j), j)


def demazure(j: int, f: Polynomial) -> Polynomial:
    """d_j(x_j f)."""
    if not 1 <= j <= f.n - 1:
        raise ValueError(f"operator index {j} out of range for n={f.n}")
    xj = tuple(1 if i == j - 1 else 0 for i in range(f.n))
    return divided_difference(j, f.mul_monomial(xj))


def isobaric(j: int, f: Polynomial) -> Polynomial:
    """d_j((1 - x_{j+1}) f); idempotent, with image symmetric in x_j, x_{j+1}."""
    if not 1 <= j <= f.n - 1:
        raise ValueError(f"operator index {j} out of range for n={f.n}")
    xj1 = tuple(1 if i == j else 0 for i in range(f.n))
    return divided_difference(j, f - f.mul_monomial(xj1))


def demazure_lascoux(j: int, f: Polynomial) -> Polynomial:
    """d_j(x_j (1 - x_{j+1}) f); raises degree by at most one."""
    if not 1 <= j <= f.n - 1:
        raise ValueError(f"operator index {j} out of range for n={f.n}")
    xj = tuple(1 if i == j - 1 else 0 for i in range(f.n))
    xjxj1 = tuple(1 if i in (j - 1, j) else 0 for i in range(f.n))
    return divided_difference(j, f.mul_monomial(xj) - f.mul_monomial(xjxj1))
