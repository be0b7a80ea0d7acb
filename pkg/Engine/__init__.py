"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Engine
"""

from .group_core import (
    FiniteGroup,
    Subgroup,
    construct_group,
    are_isomorphic,
)

from .morphisms import (
    Homomorphism,
    automorphism_group,
    enumerate_homomorphisms,
)

from .holomorph_engine import (
    RegularSubgroup,
    build_holomorph,
    regular_subgroups_in_holomorph,
)

from .structure_screen import (
    classify_group,
    screen_candidate,
)

from .hgs_count import (
    CountMethod,
    CountResult,
    count_by_method,
)
