"""Succinct permutation graphs: compact storage with fast graph queries."""

from .bits import BitSeq, ComplementView, PackedInts
from .core import (INF, InvalidPermutation, ReferenceGraph, all_distances, bfs_all,
                   build_reference, check_permutation, invert, random_permutation)
from .rmq import RmqIndex
from .grid import PermGrid
from .pio import NotProper, ProperIntervalOracle, build_from_intervals
from .pgraph import DistanceLayer, SuccinctPermGraph
from .bpgraph import BipartitePermGraph, IsolatedNotOnTop, NotBipartite, canonical_relabel
from .cpgraph import CircularPermGraph, InvalidChordTypes, random_valid_types, validate
from .algos import apsp, max_clique_min_coloring, max_independent_set_min_clique_cover, spath_pairs
from .semilocal import (GlobalPart, VertexLabel, adjacent_labels, distance_labels, encode,
                        spath_first_labels, spath_labels)

__version__ = "0.1.0"
