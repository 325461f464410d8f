"""Kaluzhnin-Krasner style embeddings of extensions into wreath products, verified on small instances."""

from .groups import FiniteGroup, GroupHom, cyclic, direct_product, hom_check, is_isomorphic, iter_homs, make_group
from .extensions import Extension, SplitExtension, check_morphism, extension_from_maps, sections
from .wreath import WreathStructure, wreath_product
from .embedding import eta_split, kk_embed, universal_factorization, verify_embedding

__version__ = "0.1.0"
