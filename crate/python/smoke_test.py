"""Smoke test for the bohr_lab extension module.

Build the module, then run this script with the directory holding
bohr_lab*.so on PYTHONPATH (see README.md).
"""

import math

import bohr_lab


def close(a, b, tol):
    return abs(a - b) <= tol


def main():
    root = bohr_lab.solve_radius(bohr_lab.RadiusProblem("t31", beta=0.5), tol=1e-12)
    assert close(root["r"], 0.2, 1e-12), root
    assert root["q_lo"][1] < 0.0 < root["q_hi"][0]

    ta = bohr_lab.solve_radius(bohr_lab.RadiusProblem("ta", n=1), tol=1e-13)
    assert close(ta["r"], math.sqrt(5.0) - 2.0, 1e-12), ta

    lo, hi = bohr_lab.boundary_distance_lower(bohr_lab.ClassParams.w0h(0.0), eps=1e-11)
    assert lo <= 2.0 * math.log(2.0) - 1.0 <= hi and hi - lo <= 1e-10

    tilde = bohr_lab.ClassParams.tilde_g0h(0.5)
    ext = bohr_lab.HarmonicModel.extremal(tilde, 60)
    assert close(bohr_lab.bohr_sum(ext, 0.2), 0.25, 1e-14)
    assert close(abs(ext(0.2)), 0.25, 1e-14)
    verdict = bohr_lab.check_theorem(ext, tilde, bohr_lab.RadiusProblem("t31", beta=0.5), 0.1)
    assert verdict["status"] == "holds", verdict

    gap = bohr_lab.sharpness_gap(bohr_lab.RadiusProblem("t33", alpha=0.0), tol=1e-6)
    assert abs(gap) <= 1e-6, gap

    assert close(bohr_lab.theorem_b_functional([0, 1], 1.0 / 3.0), 43.0 / 81.0, 1e-15)

    summary = bohr_lab.fuzz(bohr_lab.RadiusProblem("t34", alpha=0.5), samples=50, truncation=100)
    assert summary["fails"] == 0 and summary["dominance_violations"] == 0, summary

    try:
        bohr_lab.ClassParams.tilde_g0h(1.5)
    except ValueError as err:
        assert "(0, 1)" in str(err)
    else:
        raise AssertionError("beta = 1.5 accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
