"""Exact-rational solvers and a truthful mechanism for the complex-demand knapsack."""

try:
    from ckpsolve._core import *  # noqa: F401,F403  (installed layout)
except ImportError:  # pragma: no cover - in-tree builds put _core on sys.path
    import os
    import sys

    _ext_dir = os.environ.get("CKPSOLVE_EXT_DIR")
    if _ext_dir and _ext_dir not in sys.path:
        sys.path.insert(0, _ext_dir)
    from _core import *  # noqa: F401,F403

__all__ = [
    "Instance",
    "ParseError",
    "ContractError",
    "ResourceError",
    "parse_instance",
    "serialize_instance",
    "generate_instance",
    "is_feasible",
    "classify_region",
    "preprocess",
    "brute_force_opt",
    "alg_a",
    "alg_b",
    "alg_c",
    "dp_exact",
    "fptas",
    "monotone_fptas",
    "split_subset",
    "run_mechanism",
    "verify_monotone",
    "critical_value",
    "verify_ic",
    "reduce_equipartition",
    "equipartition_brute",
    "rational",
]
