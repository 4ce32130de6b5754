# Secondary cochain complexes: tuple spaces, face maps, coboundaries, cohomology

from complexes.coboundary import Cochain, assemble_delta, eval_delta
from complexes.cohomology import (
    ComplexSlice,
    classical_cohomology,
    secondary_cohomology_abelian,
    secondary_cohomology_triple,
)
from complexes.faces import face_classical, face_plain, face_twisted
from complexes.settings import ComplexData, Variant
from complexes.tuples import PairIndexSpace, TupleIndex, pair_position

__all__ = [
    "Cochain",
    "ComplexData",
    "ComplexSlice",
    "PairIndexSpace",
    "TupleIndex",
    "Variant",
    "assemble_delta",
    "classical_cohomology",
    "eval_delta",
    "face_classical",
    "face_plain",
    "face_twisted",
    "pair_position",
    "secondary_cohomology_abelian",
    "secondary_cohomology_triple",
]
