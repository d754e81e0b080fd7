"""Support and degree analysis for Grothendieck polynomials.

Everything here recomputes its inputs from first principles (diagram,
orthodontic sequence, recursive polynomial) so the checks can serve as
independent oracles for the constructors.

Two facts are verified exhaustively by the test and verify suites:

- every monomial of G_w divides the monomial of the upper closure of the
  diagram of w;
- deg G_w is bounded both by deg S_w + (number of orthodontia steps) and
  by the box count of the upper closure.

A sharper divisibility bound (the theta + xi vector) is checked as an
experiment only: a counterexample is reported, never a build failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from orthodontia.diagram import diagram_monomial, orthodontia, rothe_diagram, upper_closure
from orthodontia.grothendieck import (
    grothendieck_recursive,
    is_sorted_permutation,
    os_predecessor,
    primary_column_data,
    schubert_recursive,
)
from orthodontia.permutation import Permutation
from orthodontia.polynomial import Monomial, monomial_divides


@dataclass(frozen=True)
class DegreeReport:
    """Degree of G_w against the two combinatorial upper bounds.

    ``bound_prop`` is deg S_w plus the orthodontia step count;
    ``bound_cor`` is the box count of the upper closure.  Both bounds are
    theorems: constructing a report that violates one raises.
    """

    deg_groth: int
    deg_schub: int
    ortho_length: int
    upper_closure_size: int
    bound_prop: int
    bound_cor: int

    def __post_init__(self) -> None:
        if self.deg_groth > self.bound_prop or self.deg_groth > self.bound_cor:
            raise ValueError(f"degree bound violated: {self}")


@dataclass(frozen=True)
class SupportVectors:
    """The two exponent vectors whose sum conjecturally bounds the support.

    ``theta``: entry j counts columns whose diagram reaches row j or lower.
    ``xi``: entry j counts orthodontia steps that swapped rows j, j+1.
    """

    theta: tuple[int, ...]
    xi: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.theta) or any(v < 0 for v in self.xi):
            raise ValueError("support vectors must be nonnegative")


def check_divisibility(w: Permutation) -> tuple[bool, Monomial | None]:
    """Does every monomial of G_w divide the upper-closure monomial?

    Returns (True, None), or (False, offending exponent vector).
    """
    bound = diagram_monomial(upper_closure(rothe_diagram(w)))
    for exps in grothendieck_recursive(w).monomials():
        if not monomial_divides(exps, bound):
            return False, exps
    return True, None


def degree_report(w: Permutation) -> DegreeReport:
    groth = grothendieck_recursive(w)
    schub = schubert_recursive(w)
    deg_groth = 0 if groth.is_zero else groth.degree()
    deg_schub = 0 if schub.is_zero else schub.degree()
    length = orthodontia(rothe_diagram(w)).step_count
    closure_size = upper_closure(rothe_diagram(w)).box_count()
    return DegreeReport(
        deg_groth=deg_groth,
        deg_schub=deg_schub,
        ortho_length=length,
        upper_closure_size=closure_size,
        bound_prop=deg_schub + length,
        bound_cor=closure_size,
    )


def exponent_change_check(w: Permutation) -> bool:
    """Verify how the upper-closure monomial changes one sorted step up.

    For sorted nonidentity w with primary column data (prefix, tooth,
    gap), let u = w * s_tooth * ... * s_{prefix+1} and let gamma count
    the columns right of the leading standard block whose lowest box sits
    in row tooth+1.  Then, written without negative exponents,

        x^closure(w) * x_{prefix+1}^gap
            = x^closure(u) * (x_{prefix+2} * ... * x_{tooth+1})^gamma,

    and the exponents c_p of x^closure(u) satisfy
    c_{prefix+1} - gap = c_p + gamma for p in prefix+2..tooth+1.
    """
    if w.is_identity():
        raise ValueError("w must be a nonidentity sorted permutation")
    if not is_sorted_permutation(w):
        raise ValueError(f"{w} is not sorted")
    data = primary_column_data(w)
    u = os_predecessor(w)
    D = rothe_diagram(w)
    gamma = sum(
        1
        for c in D.columns[data.standard_cols :]
        if c and max(c) == data.tooth + 1
    )
    mw = list(diagram_monomial(upper_closure(D)))
    mu = list(diagram_monomial(upper_closure(rothe_diagram(u))))
    lhs = list(mw)
    lhs[data.prefix] += data.gap
    rhs = list(mu)
    for p in range(data.prefix + 2, data.tooth + 2):
        rhs[p - 1] += gamma
    if lhs != rhs:
        return False
    head = mu[data.prefix] - data.gap
    return all(head == mu[p - 1] + gamma for p in range(data.prefix + 2, data.tooth + 2))


def support_vectors(w: Permutation) -> SupportVectors:
    n = w.n
    maxima = [max(c) if c else 0 for c in rothe_diagram(w).columns]
    theta = tuple(sum(1 for m in maxima if m >= j) for j in range(1, n + 1))
    teeth = orthodontia(rothe_diagram(w)).teeth
    xi = tuple(sum(1 for t in teeth if t == j) for j in range(1, n + 1))
    return SupportVectors(theta, xi)


def check_conjecture(w: Permutation) -> tuple[bool, Monomial | None]:
    """Experimental check: do all monomials of G_w divide x^(theta + xi)?

    A counterexample is interesting output, not an error; callers must
    not fail a build on (False, witness).
    """
    vectors = support_vectors(w)
    bound = tuple(t + x for t, x in zip(vectors.theta, vectors.xi))
    for exps in grothendieck_recursive(w).monomials():
        if not monomial_divides(exps, bound):
            return False, exps
    return True, None


def analysis_record(w: Permutation) -> dict:
    """One JSON-ready report record for w."""
    report = degree_report(w)
    div_ok, _ = check_divisibility(w)
    conj_ok, _ = check_conjecture(w)
    return {
        "w": list(w.word),
        "deg_groth": report.deg_groth,
        "bound_prop": report.bound_prop,
        "bound_cor": report.bound_cor,
        "divisibility_ok": div_ok,
        "conjecture_ok": conj_ok,
    }
