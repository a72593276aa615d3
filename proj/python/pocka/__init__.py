"""Partially observable concurrent Kleene algebra: bounded semantics, guarded pomsets and litmus checks."""

import json

from ._pocka import (
    Bounds,
    SizeError,
    Universe,
    UsageError,
    enumerate_guarded,
    format_obs,
    format_pomset,
    format_term,
    member,
    normal_form,
    obs_equiv,
    obs_leq,
    property_p,
    sem,
    sem_unclosed,
    to_dot,
)
from . import _pocka

__all__ = [
    "Bounds",
    "SizeError",
    "Universe",
    "UsageError",
    "check_guarded",
    "enumerate_guarded",
    "format_obs",
    "format_pomset",
    "format_term",
    "litmus",
    "member",
    "normal_form",
    "obs_equiv",
    "obs_leq",
    "property_p",
    "sem",
    "sem_unclosed",
    "to_dot",
]


def check_guarded(pomset, derive=False):
    """Verdict on properties A1-A7 as a dict (same schema as the CLI's JSON output)."""
    return json.loads(_pocka.guarded_json(pomset, derive))


def litmus(spec, bounds=None, swap=False, universe=None):
    """Run the litmus pipeline on the text of a spec file."""
    return json.loads(_pocka.litmus_json(spec, bounds or Bounds(), swap, universe))
