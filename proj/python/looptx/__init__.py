"""Python front end for the looptx core.

Inputs are plain dicts/lists in the same JSON schemas the CLI accepts;
results come back as dicts.
"""

import json

from . import _looptx
from ._looptx import (
    AliasingError,
    ArgumentError,
    CompositionError,
    RefinementError,
    StructuralError,
    hnf_solve,
    run_suites,
)

__all__ = [
    "AliasingError", "ArgumentError", "CompositionError", "RefinementError", "StructuralError",
    "generators", "decompose", "abelianize", "kernel_test", "path_abelianize", "holonomy",
    "wilson", "interpolate", "loop_transform", "inverse_transform", "fourier", "fft_oracle",
    "psd_test", "grid_minimum", "refinement_matrix", "join_levels", "hnf_solve", "run_suites",
    "cli",
]


def _s(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def generators(graph):
    return json.loads(_looptx.generators(_s(graph)))


def decompose(graph, word):
    return json.loads(_looptx.decompose(_s(graph), _s(word)))


def abelianize(graph, word):
    return _looptx.abelianize(_s(graph), _s(word))


def kernel_test(graph, word):
    return _looptx.kernel_test(_s(graph), _s(word))


def path_abelianize(graph, word):
    return _looptx.path_abelianize(_s(graph), _s(word))


def holonomy(graph, connection, word):
    return json.loads(_looptx.holonomy(_s(graph), _s(connection), _s(word)))


def wilson(graph, connection, word):
    return _looptx.wilson(_s(graph), _s(connection), _s(word))


def interpolate(graph, targets, group="U1"):
    return json.loads(_looptx.interpolate(_s(graph), group, _s(targets)))


def loop_transform(cylinder):
    return json.loads(_looptx.loop_transform(_s(cylinder)))


def inverse_transform(state):
    return json.loads(_looptx.inverse_transform(_s(state)))


def fourier(poly):
    return json.loads(_looptx.fourier(_s(poly)))


def fft_oracle(poly, grid):
    return json.loads(_looptx.fft_oracle(_s(poly), grid))


def psd_test(density, window):
    return _looptx.psd_test(_s(density), window)


def grid_minimum(density, grid=65):
    return _looptx.grid_minimum(_s(density), grid)


def refinement_matrix(coarse, fine):
    return _looptx.refinement_matrix(_s(coarse), _s(fine))


def join_levels(a, b):
    return json.loads(_looptx.join_levels(_s(a), _s(b)))


def cli(*args):
    """Run a CLI subcommand; returns (exit_code, report_dict_or_None, stderr)."""
    code, out, err = _looptx.cli(list(args))
    return code, (json.loads(out) if out.strip() else None), err
