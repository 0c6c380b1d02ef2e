"""Exact computations with rational powers of monomial ideals.

Everything is exact arithmetic over the integers and rationals: monomial
ideal algebra, Newton polyhedra by double description, Rees valuations and
rational powers, hyperplane-family filtrations and symbolic powers, graded
local cohomology through degree complexes with an independent Betti-number
oracle, desk-scale Stanley depth, and a sweep harness for the asymptotic
invariants of the canonically indexed filtration.
"""

from .errors import (DegenerateIdeal, DeskScaleExceeded, DimensionMismatch,
                     ParseError, RatpowError, ScanInstability, UnboundedRegion)
from .ideals import (Exponent, MonomialIdeal, MonomialPrime, associated_primes,
                     colon_by_monomial, contains, ideal_contains_ideal,
                     ideal_from_doc, ideal_to_doc, intersect, minimal_generators,
                     minimal_primes, parse_ideal, power, product, project,
                     unit_ideal, zero_ideal)
from .polyhedra import (Face, HalfspaceQ, IntegralHalfspace, NewtonPolyhedron,
                        ScaledPolyhedron, analytic_spread, count_region,
                        enumerate_faces, extreme_rays, max_compact_face_dim,
                        minimal_points_above, newton_polyhedron,
                        polyhedron_to_doc, reduce_halfspace,
                        vertices_from_halfspaces)
from .rational_powers import (MonomialValuation, RationalIndex, ReesData,
                              as_index, canonical_denominator, integral_closure,
                              member_rational, rational_power, rees_valuations)
from .filtrations import (FamilyResult, HyperplaneFamily, SplitReport,
                          check_splitting, family_from_doc, family_index,
                          family_to_ideal, parse_family,
                          rational_power_filtration, symbolic_family,
                          symbolic_generator_ideal, symbolic_power)
from .homology import (BettiTable, CohomologyTable, DegreeKey,
                       SimplicialComplex, betti_table, big_degree_complex,
                       degree_complex, depth_quotient, lc_length,
                       lc_length_scaled, local_cohomology_table, radical,
                       reduced_euler_characteristic, reduced_homology,
                       regularity_quotient, standard_monomial_count)
from .stanley import (EquivalenceReport, StanleyInstance, power_equivalences,
                      sdepth_exact, sdepth_ideal, sdepth_quotient,
                      sdepth_rational_power_sequence)
from .sweeps import (ExperimentRecord, SweepConfig, emit, parse_records,
                     run_sweep, sweep_records)

__version__ = "0.1.0"
