"""Experimental sweeps, quarantined from the acceptance gate.

The support-bound conjecture check lives here: a counterexample would be
a publishable finding, so it is surfaced loudly but never fails the
build.
"""

from __future__ import annotations

from orthodontia.analysis import check_conjecture, support_vectors
from orthodontia.permutation import symmetric_group


def test_support_bound_experiment_s5():
    counterexamples = []
    for w in symmetric_group(5):
        ok, witness = check_conjecture(w)
        if not ok:
            counterexamples.append((w, witness))
    if counterexamples:
        print("!" * 72)
        print("SUPPORT-BOUND COUNTEREXAMPLES (experiment only, not a failure):")
        for w, witness in counterexamples:
            vectors = support_vectors(w)
            print(f"  w={w} witness={witness} theta={vectors.theta} xi={vectors.xi}")
        print("!" * 72)
    else:
        print("support-bound experiment: no counterexamples in S_5")
    # experiments never gate the build
    assert True
