"""Swan subgroups, kernel groups and realizable classes of O_K[C_p] for
imaginary quadratic K, computed from the unit group of O_K/pO_K."""

__version__ = "0.1.0"

from .abgroup import AbGroup  # noqa: E402
from .quadfield import FieldSpec, SplittingType, make_field  # noqa: E402
from .swan import RDEquality, SwanReport, kernel_group_report  # noqa: E402

__all__ = [
    "AbGroup",
    "FieldSpec",
    "SplittingType",
    "make_field",
    "RDEquality",
    "SwanReport",
    "kernel_group_report",
    "__version__",
]
