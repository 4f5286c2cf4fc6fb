"""Motivic decompositions of semismall maps built from surfaces."""

from .generating import (
    DEFAULT_S_BOUND,
    DEFAULT_T_BOUND,
    betti_series,
    goettsche_series,
    motive_series,
    parabolic_series,
)
from .hilbert import decompose_hilbert, decompose_nested, hilbert_strata, nested_strata
from .parabolic import (
    decompose_parabolic,
    parabolic_stratum_stats,
    parabolic_strata,
)
from .strata import (
    DescriptorError,
    MapDescriptor,
    StratumRecord,
    SurfaceMap,
    Verdict,
    check_semismall,
    fibre_product_dim_bound,
    hilbert_chow_descriptor,
    load_descriptor,
    relevant_strata,
    supesymm_strata,
)
from .wreath import (
    ade_surface_map,
    decompose_wreath,
    wreath_class_oracle,
    wreath_rank_table,
    wreath_strata,
)

__all__ = [
    "DEFAULT_S_BOUND",
    "DEFAULT_T_BOUND",
    "DescriptorError",
    "MapDescriptor",
    "StratumRecord",
    "SurfaceMap",
    "Verdict",
    "ade_surface_map",
    "betti_series",
    "check_semismall",
    "decompose_hilbert",
    "decompose_nested",
    "decompose_parabolic",
    "decompose_wreath",
    "fibre_product_dim_bound",
    "goettsche_series",
    "hilbert_chow_descriptor",
    "hilbert_strata",
    "load_descriptor",
    "motive_series",
    "nested_strata",
    "parabolic_series",
    "parabolic_strata",
    "parabolic_stratum_stats",
    "relevant_strata",
    "supesymm_strata",
    "wreath_class_oracle",
    "wreath_rank_table",
    "wreath_strata",
]
