"""Planted families of planar 3-trees and their straight-line embeddings on
point sets: exact predicates, family construction, embedding deciders,
canonical forms and counting bounds."""

from .bounds import BoundsReport, bounds_report, corollary_ratio, double_count_check
from .embed import (
    EmbedWitness,
    brute_embed,
    decide_embed_fixed,
    decide_embed_free,
    gadget_lemma_check,
    place_apex,
    random_drawing,
    render_svg,
    simultaneous_count,
)
from .family import FamilySpec, Skeleton, build_skeleton, degree_report, enumerate_family, family_parameters, family_size, graph_at
from .gadgets import Gadget, GadgetCatalog, default_catalog, flip, load_catalog
from .geom import Point, PointSet, general_position, hull_triangle, orient, segments_cross, strictly_inside
from .iso import canonical_form, canonical_form_rooted, iso_histogram
from .pointsets import SamplerConfig, load_order_types, sample
from .tritree import FaceTree, TriTree, face_tree, new_root, recognize
from .verify import conflict_search
