"""Interval-basis decomposition of persistence modules.

Decomposes a finite persistence module over a field into generators whose
cyclic submodules sum directly to the module, and reads the barcode off
them.  Modules can be given directly or built from simplicial filtrations,
either through homology or through the kernels of Hodge Laplacians.
"""

from .decompose import BirthSet, IntervalBasis, IntervalElement, pmd, ssd, ssd_real, verify_interval_basis
from .errors import IntervalBasisError
from .field import Field, PrimeField, RationalField, RealField, Scalar, parse_field
from .harmonic import build_harmonic_module, harmonic_induced_map, harmonic_step, hodge_decomposition, laplacian
from .homology import HomologyStep, build_persistent_homology, homology_step, induced_map
from .kernels import BACKEND
from .oracle import barcode_oracle, rank_table
from .pmodule import INFINITY, PersistenceModule, PersistencePair
from .simplicial import ChainTower, FilteredComplex, boundary_matrix, inclusion_chain_map

__all__ = [
    "BACKEND",
    "BirthSet",
    "ChainTower",
    "Field",
    "FilteredComplex",
    "HomologyStep",
    "INFINITY",
    "IntervalBasis",
    "IntervalBasisError",
    "IntervalElement",
    "PersistenceModule",
    "PersistencePair",
    "PrimeField",
    "RationalField",
    "RealField",
    "Scalar",
    "barcode_oracle",
    "boundary_matrix",
    "build_harmonic_module",
    "build_persistent_homology",
    "harmonic_induced_map",
    "harmonic_step",
    "hodge_decomposition",
    "homology_step",
    "inclusion_chain_map",
    "induced_map",
    "laplacian",
    "parse_field",
    "pmd",
    "rank_table",
    "ssd",
    "ssd_real",
    "verify_interval_basis",
]
