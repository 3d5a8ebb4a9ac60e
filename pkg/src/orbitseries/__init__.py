"""Exact computation and verification of series of nilpotent orbits."""

from .exactpoly import (Cyclo, LinExp, Literal, NotDivisibleError, ProductExpr,
                        QLaurent, ZeroExponentError, exact_div, reduce_pair)
from .partitions import (Family, Partition, PartitionPair, centralizer_oracle,
                         magic_dim_formula, orbit_dim_classical, propagate)
from .rootsystems import (AlgebraType, RootSystem, WeightedDiagram, algebra,
                          build_root_system, grading_dims,
                          minimal_orbit_diagram, orbit_dim_from_diagram,
                          root_system, series_weight_to_diagram)
from .seriesdb import (SeriesRecord, all_series, group_order, lookup,
                       reductive, rows)
from .verify import VerifyConfig, run_all

__version__ = "0.1.0"
