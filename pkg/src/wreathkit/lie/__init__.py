"""Lie algebra counterparts: exact rational structure constants, truncated U(B), coinduction."""

from .algebra import LieAlgebra, LieExtension, LieHom, LinearSection, make_lie, make_lie_extension, make_section
from .coinduced import LieModule, check_universality, lie_coinduced, lie_lift, lie_unit, make_lie_module
from .embedding import LieWreathElement, h_prime, lie_kk_embed, verify_lie_embedding, wreath_bracket
from .enveloping import PBW, DualTable, UEnvElement, coproduct_split, monomials, pbw_straighten
