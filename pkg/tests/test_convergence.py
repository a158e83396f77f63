"""Checks for the weak-convergence traces: renormalized entropies of
discretizing sequences approach the continuous limit while H diverges."""

import math

import pytest

from entrokit import laws
from entrokit.convergence import (DEFAULT_BINOMIAL_NS, DEFAULT_DUNIFORM_NS,
                                  DEFAULT_POISSON_LAMS, trace_binomial,
                                  trace_discrete_uniform, trace_poisson)
from entrokit.entropy import h_tilde, shannon_H

GAUSSIAN_H_TILDE = 1.1195901522456185


def test_binomial_trace():
    trace = trace_binomial(0.5)
    assert trace.target == pytest.approx(GAUSSIAN_H_TILDE, abs=1e-12)
    assert len(trace.points) == len(DEFAULT_BINOMIAL_NS)
    gaps = trace.gaps
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 0.01
    # classical entropy keeps growing like ln sqrt(n)
    hs = [H for _, H, _ in trace.points]
    assert all(b > a for a, b in zip(hs, hs[1:]))


def test_binomial_trace_asymmetric_p():
    trace = trace_binomial(0.3, ns=(64, 1024, 16384))
    assert abs(trace.gaps[-1]) < 0.05


def test_poisson_trace():
    trace = trace_poisson()
    assert len(trace.points) == len(DEFAULT_POISSON_LAMS)
    gaps = trace.gaps
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 0.01


def test_discrete_uniform_trace():
    trace = trace_discrete_uniform(1.0)
    assert trace.target == pytest.approx(math.log(2.0), abs=1e-15)
    assert len(trace.points) == len(DEFAULT_DUNIFORM_NS)
    # for n a power of two the quartiles sit exactly on grid points and the
    # renormalized entropy equals the limit at every index
    assert all(abs(g) < 1e-12 for g in trace.gaps)


def test_discrete_uniform_trace_scale_invariant():
    a, b = trace_discrete_uniform(1.0), trace_discrete_uniform(42.0)
    for (_, _, ht1), (_, _, ht2) in zip(a.points, b.points):
        assert ht1 == pytest.approx(ht2, abs=1e-10)


def test_rows_shape():
    trace = trace_binomial(0.5, ns=(16, 64))
    rows = trace.rows()
    assert len(rows) == 2
    index, H, H_t, target, gap = rows[0]
    assert index == 16
    assert H == pytest.approx(shannon_H(laws.binomial(16, 0.5)))
    assert gap == pytest.approx(abs(H_t - target))


def test_divergence_of_classical_entropy():
    n = 256
    jump = (shannon_H(laws.binomial(4 * n, 0.5))
            - shannon_H(laws.binomial(n, 0.5)))
    assert abs(jump - math.log(2.0)) < 0.02
