"""MCM modules over XY(X-Y)(X-lambda Y) and sheaves on the weighted projective line P^1(2,2,2,2)."""

import json

from ._core import (
    DomainError,
    K0Class,
    ParseError,
    betti_catalog,
    classify_betti,
    cohom_rank_one,
    cohom_rank_two,
    cohom_via_euler,
    enumerate_real_roots,
    euler_pairing,
    mf_betti,
    mf_cone,
    mf_kst,
    mf_linear,
    mf_reduce,
    mf_reduced,
    mf_verify,
    phi_from_infinity,
    rd_from_betti,
    reduce_to_fundamental,
    region,
    run_cli,
    shift_rd,
    simple,
    skyscraper,
    structure_sheaf,
    word_for_slope,
    word_matrix,
)


def load_mf(text):
    """Matrix factorization JSON as a Python dict."""
    return json.loads(text)


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
