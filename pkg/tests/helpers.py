"""Shared helpers for the test suite: seeded random generators and a CLI runner."""

import os
import subprocess
import sys

import numpy as np

from framerep import Frame, LinearOperator


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_frame(rng, n, k, max_condition=1e6):
    """A random spanning family of k >= n Gaussian vectors in C^n."""
    assert k >= n
    while True:
        frame = Frame(random_complex(rng, k, n))
        if frame.is_frame and frame.condition <= max_condition:
            return frame


def random_riesz_basis(rng, n, max_condition=1e6):
    return random_frame(rng, n, n, max_condition)


def random_operator(rng, dim_out, dim_in):
    return LinearOperator(random_complex(rng, dim_out, dim_in))


def conditioned_operator(rng, n, max_condition=1e2):
    """Random invertible operator on C^n with singular values in [1, max_condition]."""
    q1, _ = np.linalg.qr(random_complex(rng, n, n))
    q2, _ = np.linalg.qr(random_complex(rng, n, n))
    s = np.exp(rng.uniform(0.0, np.log(max_condition), n))
    return LinearOperator((q1 * s) @ q2.conj().T)


def random_unitary(rng, n):
    q, r = np.linalg.qr(random_complex(rng, n, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def run_cli(args, cwd=None, env_extra=None):
    """Run the installed CLI in a subprocess and capture its output."""
    env = os.environ.copy()
    env.pop("FRAMEREP_TOL", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "framerep", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
        env=env,
    )
