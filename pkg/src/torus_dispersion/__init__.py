"""Dispersion of finite point sets on the torus and in the unit cube.

The dispersion of a point set is the volume of the largest axis-parallel box
that contains none of its points. On the torus every n-point set in
dimension d leaves an empty periodic box of volume at least ``min(1, d/n)``;
:func:`witness_theorem1` builds one such box.
"""

from .bounds import (
    HINRICHS_C,
    BoundReport,
    ahr_lower_bound,
    bound_report,
    hinrichs_N_lower,
    inverse_N0_lower,
    split_cube_bound,
    theorem1_bound,
)
from .core import (
    AnchoredBox,
    PeriodicBox,
    PeriodicInterval,
    PointSet,
    box_contains,
    box_volume,
    canonicalize,
    interval_contains,
    is_empty,
    project,
    to_periodic,
)
from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    DispersionError,
    InvalidInputError,
    InvariantViolationError,
    WrongCaseError,
)
from .exact import (
    DEFAULT_BUDGET,
    DispersionResult,
    Method,
    axis_candidates,
    cyclic_gap_dispersion_1d,
    exact_dispersion_boxes,
    exact_dispersion_periodic,
    sampled_dispersion_lower_bound,
)
from .generators import (
    GeneratorSpec,
    gen_equispaced_1d,
    gen_fibonacci,
    gen_grid,
    gen_kronecker,
    gen_random,
    generate,
)
from .witness import (
    WitnessCase,
    WitnessResult,
    lift_box,
    max_window,
    window_lengths,
    witness_full_volume,
    witness_theorem1,
)

__version__ = "0.1.0"
