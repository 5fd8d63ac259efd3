"""Elliptic curve models, group law, twists and model reductions."""

from .curves import (
    INF,
    LongW,
    ShortW,
    SingularCurveError,
    add,
    double,
    integral_scale,
    isomorphic_over_Q,
    map_point,
    mul,
    neg,
    quadratic_twist,
    scale_model,
    sub,
    torsion_order,
)
from .models import (
    CubicYModel,
    DegenerateModelError,
    ModelMap,
    QuarticModel,
    cubic_discriminant,
    cubic_y3_to_weierstrass,
    field_nth_root,
    quartic_to_weierstrass,
)


def j_invariant(E):
    return E.j_invariant()


__all__ = [
    "INF",
    "CubicYModel",
    "DegenerateModelError",
    "LongW",
    "ModelMap",
    "QuarticModel",
    "ShortW",
    "SingularCurveError",
    "add",
    "cubic_discriminant",
    "cubic_y3_to_weierstrass",
    "double",
    "field_nth_root",
    "integral_scale",
    "isomorphic_over_Q",
    "j_invariant",
    "map_point",
    "mul",
    "neg",
    "quadratic_twist",
    "quartic_to_weierstrass",
    "scale_model",
    "sub",
    "torsion_order",
]
