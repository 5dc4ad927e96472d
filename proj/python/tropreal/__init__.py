"""Exact toolkit for real tropical plane curves."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import (
    __version__,
    hyperbolicity_report as _hyperbolicity_report,
    intersection_report as _intersection_report,
)


def hyperbolicity_report(curve, phase):
    """Hyperbolicity report as a dict."""
    return _json.loads(_hyperbolicity_report(curve, phase))


def intersection_report(a, phase_a, b, phase_b):
    """Classified intersection components with real-lift outcomes, as a dict."""
    return _json.loads(_intersection_report(a, phase_a, b, phase_b))
