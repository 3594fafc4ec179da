"""Mod 2 homology calculator for iterated loop spaces of spheres."""
from .algebra import (
    POINT,
    Element,
    GenMonomial,
    Generator,
    LoopSphere,
    Monomial,
    Q0S0,
    QSphere,
    QStunted,
    Space,
    admissible,
    enumerate_basis,
    excess,
    generators,
    parse_space,
    sphere,
    stunted,
    zeta,
)
from .arith import binom_mod2, rho
from .dlops import (
    FuelExhausted,
    OutOfModel,
    adem_normalize,
    apply_Q,
    apply_ops,
    convert_lower_to_upper,
    convert_upper_to_lower,
    weight,
)
from .hopf import coproduct, is_primitive, primitive_basis, reduced_coproduct
from .linalg import solve_f2
from .maps import j2_project, stabilize, suspend
from .parse import format_element, parse_expr
from .replication import run_replication
from .sieve import sieve_report, spherical_candidates, square_candidates, wellington_check
from .steenrod import sq_down

__version__ = "0.1.0"
