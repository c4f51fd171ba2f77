"""Exact spectra of Garland's Laplacian on finite buildings.

Exact values are returned as :class:`fractions.Fraction`; polynomial
coefficients are listed low-to-high.
"""

import json
from fractions import Fraction

from . import _garland
from ._garland import Complex, GarlandError, flag_complex, full_simplex, link

__version__ = _garland.__version__

__all__ = [
    "Complex",
    "GarlandError",
    "Session",
    "apply_laplacian",
    "flag_complex",
    "full_simplex",
    "isolate_real_roots",
    "laplacian_entries",
    "link",
    "minimal_polynomial",
    "paper_polynomial",
]


def _exact(values):
    return [Fraction(v) for v in values]


def _text(values):
    return [f"{Fraction(v).numerator}/{Fraction(v).denominator}" for v in values]


def laplacian_entries(complex_, i):
    """(row, col, value) for every nonzero of Delta on C^i."""
    return [(r, c, Fraction(v)) for r, c, v in _garland.laplacian_entries(complex_, i)]


def apply_laplacian(complex_, i, values):
    return _exact(_garland.apply_laplacian(complex_, i, _text(values)))


def minimal_polynomial(complex_, i, seed=0):
    return _exact(_garland.minimal_polynomial(complex_, i, seed))


def isolate_real_roots(coeffs, width=Fraction(1, 10**6)):
    """Isolating intervals; each root is a dict with lo, hi, exact (or None), zero."""
    roots = json.loads(_garland.isolate_real_roots(_text(coeffs), _text([width])[0]))
    for r in roots:
        r["lo"], r["hi"] = Fraction(r["lo"]), Fraction(r["hi"])
        if r["exact"] is not None:
            r["exact"] = Fraction(r["exact"])
    return roots


def paper_polynomial(ell, q, i):
    p = _garland.paper_polynomial(ell, q, i)
    return None if p is None else _exact(p)


class Session:
    """Memoizing front end; reports are the same JSON documents the CLI prints."""

    def __init__(self, cache_dir=None, threads=1, seed=0, width=Fraction(1, 10**6), extended=False):
        self._s = _garland.Session(
            cache_dir=None if cache_dir is None else str(cache_dir),
            threads=threads,
            seed=seed,
            width=_text([width])[0],
            extended=extended,
        )

    def spectrum(self, ell, q, i):
        return json.loads(self._s.spectrum(ell, q, i))

    def spectrum_complex(self, complex_, i):
        return json.loads(self._s.spectrum_complex(complex_, i))

    def verify(self, ell, q, i):
        return json.loads(self._s.verify(ell, q, i))

    def verify_complex(self, complex_, i):
        return json.loads(self._s.verify_complex(complex_, i))

    def report(self, grid="default"):
        return json.loads(self._s.report(grid))
