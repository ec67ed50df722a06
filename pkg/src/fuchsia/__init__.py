"""Flute and Loch Ness monster Fuchsian groups in the upper half-plane."""

from .errors import *  # noqa: F401,F403
from .flute import (
    ConstantTail,
    CustomTail,
    FluteGroup,
    GeometricTail,
    HarmonicTail,
    SequenceSpec,
    TypeVerdict,
    basmajian_term,
    build_flute,
    classify_type,
    convex_core_boundary,
    flute_generator,
    flute_polygon,
    is_integral,
    length_param,
    partial_sums,
)
from .geodesics import (
    HalfCircle,
    Region,
    Side,
    VerticalRay,
    ext_contains,
    geodesic_from_endpoints,
    image_of_geodesic,
    mutually_exterior,
    pairing_map,
)
from .moebius import (
    INF,
    MapClass,
    MoebiusMap,
    apply,
    classify,
    compose,
    fixed_points,
    inverse,
    normalize,
    translation_length,
)
from .monster import (
    KindVerdict,
    MonsterSpec,
    MonsterWindow,
    build_monster,
    first_kind_check,
    monster_generators,
    strip,
    validate_windows,
)
from .render import RenderStyle, Viewport, render_svg
from .tess import (
    GroupPresentation,
    OrbitTile,
    enumerate_orbit,
    flute_presentation,
    limit_set_sample,
    monster_presentation,
)

__version__ = "0.1.0"
