"""Named convex-space instances and the all-laws suite the CLI drives."""

from __future__ import annotations

from typing import Callable

from .checking import LawReport
from .conical import ScaledSpace, check_conical_laws, check_entropic_identity, check_s1_convn
from .errors import UnknownInstanceError
from .hull import check_hull_laws
from .multiary import check_multiary_laws
from .spaces import (
    ConvexSpace,
    DistSpace,
    DominatedPairSpace,
    FirstProjectionLine,
    RatLine,
    RatVectorSpace,
    check_binary_laws,
)

INSTANCES: dict[str, Callable[[], ConvexSpace]] = {
    "rat": RatLine,
    "vec1": lambda: RatVectorSpace(1),
    "vec2": lambda: RatVectorSpace(2),
    "vec3": lambda: RatVectorSpace(3),
    "fdist2": lambda: DistSpace(2),
    "fdist3": lambda: DistSpace(3),
    "fdist4": lambda: DistSpace(4),
    "dompair": lambda: DominatedPairSpace(3),
    "scaled-rat": lambda: ScaledSpace(RatLine()),
    # shipped mutant: conv(p, x, y) = x; the suite must flag it
    "broken-demo": FirstProjectionLine,
}


def instance_names() -> list[str]:
    return sorted(INSTANCES)


def get_instance(name: str) -> ConvexSpace:
    try:
        factory = INSTANCES[name]
    except KeyError:
        raise UnknownInstanceError(
            f"unknown instance {name!r}; known: {', '.join(instance_names())}"
        ) from None
    return factory()


def full_law_suite(space: ConvexSpace, seed: int = 0, cases: int = 500) -> LawReport:
    """Every exact checker over one instance: binary axioms, the
    entropic identity, the multiary laws, the conical envelope, the s1
    embedding, and the hull decompositions."""
    return LawReport.merge([
        check_binary_laws(space, seed, cases),
        check_entropic_identity(space, seed, cases),
        check_multiary_laws(space, seed, cases),
        check_conical_laws(space, seed, cases),
        check_s1_convn(space, seed, cases),
        check_hull_laws(space, seed, cases),
    ])
