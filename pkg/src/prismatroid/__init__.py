"""Binary matroid kernel and verification harness.

GF(2) linear algebra on bit-packed matrices, labeled binary matroids with
minors and duality, connectivity scans, canonical forms and isomorphism
witnesses, extension/coextension enumeration up to isomorphism, a catalog of
named matroids, and a check registry that rederives the reference tables.
"""

from .gf2 import BitMatrix, rank, rref, standard_form
from .matroid import BinaryMatroid, from_graph, from_standard_form
from .connect import (
    Separation,
    induces_separation,
    is_3_connected,
    is_internally_4_connected,
    is_k_separation,
    lambda_,
)
from .iso import CanonicalForm, canonical_form, is_isomorphic, verify_map
from .enumeration import (
    ExtensionClass,
    MinorWitness,
    SplitterChain,
    coextend_by,
    coextensions,
    decomposer_criterion,
    extend_by,
    extensions,
    grow_3connected,
    has_minor,
)
from .catalog import Catalog, CatalogEntry, build_family, build_Z, default_catalog

__all__ = [
    "BitMatrix",
    "rank",
    "rref",
    "standard_form",
    "BinaryMatroid",
    "from_graph",
    "from_standard_form",
    "Separation",
    "lambda_",
    "is_k_separation",
    "is_3_connected",
    "is_internally_4_connected",
    "induces_separation",
    "CanonicalForm",
    "canonical_form",
    "is_isomorphic",
    "verify_map",
    "ExtensionClass",
    "MinorWitness",
    "SplitterChain",
    "extensions",
    "coextensions",
    "extend_by",
    "coextend_by",
    "has_minor",
    "decomposer_criterion",
    "grow_3connected",
    "Catalog",
    "CatalogEntry",
    "build_Z",
    "build_family",
    "default_catalog",
]
