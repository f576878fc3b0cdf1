"""Exact computations for sl4: the q-analog of Kostant's partition function,
Weyl alternation sets, and q-analogs of weight multiplicities."""

from .alternation import AltSet, LatticeWindow, altset, enumerate_distinct_altsets
from .errors import NegativeInput, NonIntegral, PreconditionViolated
from .qmult import mq_closed, mq_direct, multiplicity
from .qpartition import (
    closed_partition_count, closed_qpartition, oracle_triple_sum, oracle_vector_partitions,
)
from .qpoly import QPoly
from .weights import FWeight, RWeight
from .weyl import WeylElement, all_elements

__version__ = "0.1.0"

__all__ = [
    "AltSet", "LatticeWindow", "altset", "enumerate_distinct_altsets",
    "NegativeInput", "NonIntegral", "PreconditionViolated",
    "mq_closed", "mq_direct", "multiplicity",
    "closed_partition_count", "closed_qpartition", "oracle_triple_sum",
    "oracle_vector_partitions", "QPoly", "FWeight", "RWeight", "WeylElement",
    "all_elements",
]
