"""Exact monochromatic 3-AP computations; rationals are fractions.Fraction."""

import json
from fractions import Fraction

from . import _core
from ._core import IoError, TieError, count_ap3, count_offby1, counts

__all__ = [
    "IoError", "TieError", "count_ap3", "count_offby1", "counts", "evaluate_f",
    "certify_point", "enumerate_configurations", "minimize", "fraction_mono",
    "bead_fraction", "discretize", "circle_mono_fraction", "circle_monte_carlo",
]


def _strs(values):
    return [str(Fraction(v)) for v in values]


def evaluate_f(endpoints):
    return Fraction(_core.evaluate_f(_strs(endpoints)))


def certify_point(endpoints):
    d = _core.certify_point(_strs(endpoints))
    d["value"] = Fraction(d["value"])
    d["gradient"] = [Fraction(g) for g in d["gradient"]]
    return d


def enumerate_configurations(n, workers=1, mirror=False):
    """Serialized chambers, sorted."""
    return _core.enumerate_configurations(n, workers, mirror)


def minimize(n_max, cache_dir=None, workers=1):
    """Full report as a dict; rationals stay "p/q" strings except global value."""
    report = json.loads(_core.minimize_report(n_max, None if cache_dir is None else str(cache_dir), workers))
    report["value"] = Fraction(report["global"]["value"])
    return report


def fraction_mono(coloring):
    return Fraction(_core.fraction_mono(coloring))


def bead_fraction(coloring):
    return Fraction(_core.bead_fraction(coloring))


def discretize(endpoints, N):
    return _core.discretize(_strs(endpoints), N)


def circle_mono_fraction(p):
    return Fraction(_core.circle_mono_fraction(str(Fraction(p))))


def circle_monte_carlo(arcs, samples, seed=0, workers=1):
    """arcs: iterable of (start, length, color) with color "R" or "B"."""
    payload = [{"start": str(Fraction(s)), "length": str(Fraction(l)), "color": c} for s, l, c in arcs]
    return _core.circle_monte_carlo(json.dumps(payload), samples, seed, workers)
