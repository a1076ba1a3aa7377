"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the captured output with ``-s`` or in the
summary) or directly: ``python3 tests/test_acceptance.py``.
"""
import itertools
import json
import math
import sys
import tempfile
import time
from pathlib import Path

import numpy as np
import pytest

from slopegen import kernels
from slopegen.algebra import I, J, K, ONE, SplitQuaternion, multiply, quadratic_form
from slopegen.audit import EXAMPLES, matrix_audit, random_unit_timelike, surface_deviation
from slopegen.cases import SlopeCase
from slopegen.cli import paper_examples
from slopegen.curves import builtin
from slopegen.rotation import rotation_matrix
from slopegen.slope_surfaces import SurfaceSpec, evaluate, verify

FIXTURE = json.loads((Path(__file__).parent / "fixtures" / "slope_constants.json").read_text())
U_RANGE, V_RANGE = (0.5, 3.0), (-2.0, 2.0)

# matrices from criteria 2-4, checked by criterion 5
_MATRICES: list[np.ndarray] = []


def _line(n, ok, detail, seconds):
    status = "PASS" if ok else "FAIL"
    return f"[{status}] criterion {n}: {detail} ({seconds * 1e3:.1f} ms)"


def _example_spec(key, nu=40, nv=40, u=U_RANGE, v=V_RANGE):
    ex = EXAMPLES[key]
    return ex, SurfaceSpec(ex.case, ex.theta, ex.curve, u, v, nu, nv)


def criterion_1():
    basis = (ONE, I, J, K)
    # (row, col) -> expected, from the multiplication rules written out by hand
    want = {
        (0, 0): ONE, (0, 1): I, (0, 2): J, (0, 3): K,
        (1, 0): I, (1, 1): -ONE, (1, 2): K, (1, 3): -J,
        (2, 0): J, (2, 1): -K, (2, 2): ONE, (2, 3): -I,
        (3, 0): K, (3, 1): J, (3, 2): I, (3, 3): ONE,
    }
    t0 = time.perf_counter()
    bad = [(a, b) for a, b in itertools.product(range(4), repeat=2)
           if multiply(basis[a], basis[b]) != want[(a, b)]]
    dt = time.perf_counter() - t0
    return not bad and dt < 1e-3, f"16 basis products exact, {len(bad)} mismatches", dt


def criterion_2():
    t0 = time.perf_counter()
    ex, spec = _example_spec("spacelike-cone-spherical")
    u, v = spec.grid_points()
    forms = evaluate(spec, u, v)
    _MATRICES.append(forms["matrices"])
    dev = surface_deviation(ex, u, v, forms)
    dt = time.perf_counter() - t0
    worst = max(dev.values())
    return worst <= 1e-12 and dt < 1.0, f"spherical example, 3 forms vs closed form, max rel {worst:.2e} <= 1e-12", dt


def criterion_3():
    details, ok, total = [], True, 0.0
    for key in ("timelike-cone", "spacelike-cone-hyperbolic"):
        t0 = time.perf_counter()
        ex, spec = _example_spec(key)
        u, v = spec.grid_points()
        forms = evaluate(spec, u, v)
        _MATRICES.append(forms["matrices"])
        grid = max(surface_deviation(ex, u, v, forms).values())
        vv = np.linspace(-2.0, 2.0, 41)
        uu = np.ones_like(vv)
        at1 = max(surface_deviation(ex, uu, vv, evaluate(spec, uu, vv)).values())
        dt = time.perf_counter() - t0
        total += dt
        ok &= grid <= 1e-4 and at1 <= 1e-12 and dt < 1.0
        details.append(f"{key} grid {grid:.2e} <= 1e-4, u=1 {at1:.2e} <= 1e-12")
    return ok, "; ".join(details), total


def _random_specs(n=30, seed=2024):
    rng = np.random.default_rng(seed)
    pools = {
        SlopeCase.TIMELIKE_CONE: (
            (0.2, 3.0),
            [("h2-hyperbola", lambda: {}), ("h2-circle", lambda: {"a": float(rng.choice([-1, 1]) * rng.uniform(0.2, 2.0))})],
        ),
        SlopeCase.SPACELIKE_CONE_SPHERICAL: (
            (0.2, math.pi / 2),
            [("s12-timelike-hyperbola", lambda: {"a": float(rng.uniform(-0.9, 0.9))})],
        ),
        SlopeCase.SPACELIKE_CONE_HYPERBOLIC: (
            (0.3, 3.0),
            [("s12-circle", lambda: {}), ("s12-spacelike-circle-like", lambda: {"a": float(rng.uniform(-1.5, 1.5))})],
        ),
    }
    cases = list(SlopeCase)
    out = []
    for _ in range(n):
        case = cases[int(rng.integers(3))]
        (lo, hi), curves = pools[case]
        name, params = curves[int(rng.integers(len(curves)))]
        theta = float(rng.uniform(lo, hi))
        out.append(SurfaceSpec(case, theta, builtin(name, params()), U_RANGE, V_RANGE, 20, 20))
    return out


def criterion_4():
    t0 = time.perf_counter()
    specs = _random_specs()
    worst = 0.0
    for s in specs:
        forms = evaluate(s)
        _MATRICES.append(forms["matrices"])
        worst = max(worst, verify(s).max_form_deviation)
    dt = time.perf_counter() - t0
    ncase = len({s.case for s in specs})
    return worst <= 1e-9 and dt < 5.0, f"30 random triples ({ncase} cases), max dev/(1+max|x|) {worst:.2e} <= 1e-9", dt


def criterion_5():
    t0 = time.perf_counter()
    if not _MATRICES:
        criterion_2(), criterion_3(), criterion_4()
    m = np.concatenate(_MATRICES)
    eta = np.diag([-1.0, 1.0, 1.0])
    g = np.einsum("nki,kl,nlj->nij", m, eta, m) - eta
    metric_dev = float(np.abs(g).max())
    det_dev = float(np.abs(np.linalg.det(m) - 1.0).max())
    dt = time.perf_counter() - t0
    ok = metric_dev <= 1e-10 and det_dev <= 1e-10
    return ok, f"{len(m)} matrices, max |M^T eta M - eta| {metric_dev:.2e}, max |det - 1| {det_dev:.2e}", dt


def criterion_6():
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    hom = norm = 0.0
    for _ in range(100):
        p, q = random_unit_timelike(rng), random_unit_timelike(rng)
        lhs = rotation_matrix(multiply(p, q)).array()
        rhs = (rotation_matrix(p) @ rotation_matrix(q)).array()
        hom = max(hom, float(np.abs(lhs - rhs).max() / (1 + np.abs(rhs).max())))
        prod = quadratic_form(p) * quadratic_form(q)
        norm = max(norm, abs(quadratic_form(multiply(p, q)) - prod) / (1 + abs(prod)))
    dt = time.perf_counter() - t0
    return hom <= 1e-10 and norm <= 1e-10, f"100 pairs, homomorphism {hom:.2e}, norm {norm:.2e}", dt


def criterion_7():
    t0 = time.perf_counter()
    ok, parts = True, []
    for key in EXAMPLES:
        _, spec = _example_spec(key)
        r = verify(spec)
        frac = r.excluded_points / (spec.nu * spec.nv)
        fx = FIXTURE[key]
        regress = abs(r.slope_cosine_mean - fx["grid_mean"]) <= 1e-12 * abs(fx["grid_mean"])
        ok &= r.slope_cosine_stddev <= 1e-6 and frac < 0.01 and regress
        parts.append(f"{key} mean {r.slope_cosine_mean:.12g} std {r.slope_cosine_stddev:.1e} excl {r.excluded_points}")
    dt = time.perf_counter() - t0
    return ok, "; ".join(parts), dt


def criterion_8():
    t0 = time.perf_counter()
    rep = matrix_audit()
    dt = time.perf_counter() - t0
    confirmed_families = all(e.confirmed for e in rep.entries if e.source.startswith(("generic", "family")))
    bad = [f"{e.source.split()[-1]}({e.row},{e.col})" for e in rep.discrepancies]
    ok = rep.passed and confirmed_families and bool(bad)
    return ok, f"closed forms confirmed to 1e-10, {len(bad)} printed entries disagree: {', '.join(bad)}", dt


def criterion_9():
    t0 = time.perf_counter()
    with tempfile.TemporaryDirectory() as d:
        a, b = Path(d) / "a", Path(d) / "b"
        paper_examples(a)
        paper_examples(b)
        files = sorted(p.name for p in a.iterdir())
        same = files == sorted(p.name for p in b.iterdir()) and all(
            (a / f).read_bytes() == (b / f).read_bytes() for f in files
        )
    dt = time.perf_counter() - t0
    return same, f"paper-examples twice, {len(files)} files byte-identical", dt


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("n", range(1, 10))
def test_criterion(n, capsys):
    ok, detail, dt = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail, dt))
    assert ok, detail


def main() -> int:
    print(f"backend: {kernels.backend.NAME}")
    failures = 0
    for n, fn in enumerate(CRITERIA, 1):
        ok, detail, dt = fn()
        failures += not ok
        print(_line(n, ok, detail, dt))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
