"""Exact level-set topology on triangulated closed orientable surfaces.

Scalar fields with distinct values across every edge, their contour
graphs, saddle atoms with ribbon structure, the finite symmetry groups
preserving the field, and sections lifting a local action at a vertex
back to surface symmetries.
"""

from .errors import (BadParameter, ConditionCViolated, Disconnected, InvalidVertex,
                     NoSuchVertex, NonManifold, NonOrientable, NotASubgroup,
                     NotClosed, NotCritical, NotGeneric, NotSpecial,
                     NotWellDefined, OrbitMismatch, ParseError, ReebSymError,
                     SizeLimit, TwistUnrealizable)
from .exact import decimal_str, parse_decimal
from .surface import (GenericityReport, ScalarField, SurfaceComplex, SurfaceStats,
                      VertexClass, build_complex, census, classify_all,
                      classify_vertex, make_field, require_generic, surface_stats,
                      validate_level_generic)
from .io_srf import emit_srf, load_srf, parse_srf, save_srf
from .fixtures import make_fixture
from .reeb import (ReebEdge, ReebGraph, ReebProjection, ReebVertex, Star,
                   compute_reeb, level_nodes_of_face, star_of)
from .atom import (Arc, Atom, BoundaryWalk, CriticalComponent, PartitionXi, Region,
                   SpecialReport, atom_stats, attach_regions, boundary_walks,
                   build_partition, extract_critical_component, germ_slots,
                   is_special)
from .group import (GroupContext, LocalAction, PermutationGroup, ReebAutomorphism,
                    SurfAutomorphism, compute_stabilizer_group, germ_subgroup,
                    group_context, induce_reeb_automorphism, local_stabilizer,
                    phi_and_preimage)
from .lift import (ConditionCReport, LiftSetup, Section, SectionVerification,
                   SplitMaps, SplitResult, XiAction, XiPerm, check_condition_C,
                   construct_section, find_section_oracle, lift_automorphism,
                   prepare_lift, refine_group, section_phi, split_along,
                   verify_section, xi_action, xi_permutation)

__version__ = "0.1.0"
