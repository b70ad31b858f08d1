"""kegraph: recognize König-Egerváry graphs and check their matching structure.

A graph is König-Egerváry (K-E) when its independence number and matching
number add up to its order.  The package offers four independent
recognizers, constructive witnesses for both answers, and executable checks
of the structural statements about maximum matchings, ``core(G)`` and
critical independent sets.
"""

from .analysis import (Analysis, CheckReport, Decomposition, KEReport, Theorem1Report,
                       bounds_check, check_core_structure, check_identities, check_prop3,
                       check_saturation_prop, check_star_decomposition, check_theorem1,
                       is_ke, ke_decomposition, run_check)
from .budget import Budget
from .errors import (BudgetExceeded, GraphError, GraphMismatchError, NotMaximumError,
                     ParseError, PreconditionError, RecognizerDisagreement)
from .generators import fixture, fixture_matching, generate
from .graph import (EdgeSet, Graph, VertexSet, closed_neighborhood, cut_edges, delete_edges,
                    delete_vertices, induced_subgraph, is_independent, neighborhood, parse_graph,
                    read_graph, serialize_graph, write_graph)
from .independence import (IndependenceReport, core, critical_difference,
                           critical_independence_number, enumerate_maximum_independent_sets,
                           independence_number, independence_report, is_critical,
                           max_critical_set, maximum_independent_set)
from .matching import (AlternatingPath, Matching, MuReport, StructureWitness,
                       augment_via_reachable_set, cover_choice, deficiency,
                       enumerate_maximum_matchings, exposed_vertices, find_flower,
                       find_flower_or_posy, find_forbidden_configuration, find_posy,
                       matching_number, maximum_matching, maximum_matchings,
                       mu_critical_vertices, mu_report)

__version__ = "0.1.0"
