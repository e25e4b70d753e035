"""Sphere maps x -> (a + T x) / ||a + T x||: fixed points, witnesses, sweeps."""

import json

import numpy as np

from . import _affsphere
from ._affsphere import AffsphereError, apply, apply_inverse, inverse_offset_norm, orbit, run_cli

__all__ = [
    "AffsphereError",
    "apply",
    "apply_inverse",
    "classify",
    "classify_product",
    "conjugate_or_power_search",
    "fixed_points",
    "inverse_offset_norm",
    "involution_check",
    "nonexpansive_witness",
    "orbit",
    "rotation",
    "rotation_fixed_points",
    "run_cli",
    "sm_ledger",
    "sweep",
    "system",
    "verify",
]


def rotation(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def system(T, a):
    """System description dict for T and a."""
    T = np.asarray(T, dtype=float)
    return {"dim": int(T.shape[0]), "matrix": T.tolist(), "offset": np.asarray(a, dtype=float).tolist()}


def rotation_fixed_points(theta, a):
    return json.loads(_affsphere.rotation_fixed_points(theta, a))


def fixed_points(T, a, period=1, n_scan=4096):
    return json.loads(_affsphere.fixed_points(T, a, period, n_scan))


def involution_check(T, a, samples=1000):
    return json.loads(_affsphere.involution_check(T, a, samples))


def classify(sys, delta=0.01, horizon=500, seed=42):
    return json.loads(_affsphere.classify(json.dumps(sys), delta, horizon, seed))


def classify_product(factors, delta=0.01, horizon=500, seed=42):
    return json.loads(_affsphere.classify_product(json.dumps({"factors": list(factors)}), delta, horizon, seed))


def verify(witness):
    return json.loads(_affsphere.verify(json.dumps(witness)))


def conjugate_or_power_search(T, conjugate=False, seed=42):
    return json.loads(_affsphere.conjugate_or_power_search(T, conjugate, seed))


def nonexpansive_witness(T, a, delta=0.01, horizon=500, seed=42):
    return json.loads(_affsphere.nonexpansive_witness(T, a, delta, horizon, seed))


def sm_ledger(T, a, x, m):
    return json.loads(_affsphere.sm_ledger(T, a, x, m))


def sweep(thetas, alphas, period2=True, threads=0):
    """CSV text with header theta,alpha,fixed_count,period2_count,boundary."""
    return _affsphere.sweep_csv(list(thetas), list(alphas), period2, threads)
