"""Python face of the orthopack engine.

The heavy lifting happens in the compiled extension; this wrapper turns the
JSON result strings into dictionaries.
"""

import json

try:
    from ._orthopack import (  # packaged wheel layout
        edd_feasible,
        gen_instance_text,
        opt_bins_1d,
        opt_bins_large_symmetric,
        presenter_vs_policy,
        render_svg,
        run_adversary_json,
        run_match_json,
        sort_opt,
        validate_packing_text,
    )
except ImportError:
    from _orthopack import (
    edd_feasible,
    gen_instance_text,
    opt_bins_1d,
    opt_bins_large_symmetric,
    presenter_vs_policy,
    render_svg,
    run_adversary_json,
    run_match_json,
        sort_opt,
        validate_packing_text,
    )

__all__ = [
    "adversary",
    "edd_feasible",
    "gen_instance_text",
    "opt_bins_1d",
    "opt_bins_large_symmetric",
    "presenter_vs_policy",
    "render_svg",
    "run",
    "sort_opt",
    "validate_packing_text",
]


def run(instance_text, algorithm, bound_audit=True):
    """Run an online algorithm over an instance file text.

    Returns (result dict, packing file text).
    """
    result_json, packing = run_match_json(instance_text, algorithm, bound_audit)
    return json.loads(result_json), packing


def adversary(family, n, algorithm, seed=0):
    """Drive a lower-bound family; returns (result dict, trace text, certificate text)."""
    out = run_adversary_json(family, n, algorithm, seed)
    return json.loads(out["result"]), out["trace"], out["certificate"]
