"""Factorization forests for homomorphisms into finite semigroups."""

__version__ = "0.1.0"

from .builder import JDecomposition, build_forest, j_factorize, prefix_set, height_bound
from .errors import FactForestError
from .forest import Leaf, Node, chain, height, tree_yield
from .green import GreenData, compute_green, j_upper_set_size
from .oracle import OracleResult, min_height_forest
from .range_product import ForestIndex, preprocess, query
from .semigroup import (
    Homomorphism,
    Semigroup,
    cyclic_group,
    hom_image,
    homomorphism,
    idempotents,
    is_idempotent,
    new_semigroup,
    product,
    rectangular_band,
    transformation_closure,
)
from .verify import VerifyReport, verify_valid
