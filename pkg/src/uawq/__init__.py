"""uawq: exact models of the universal Askey-Wilson algebra at a root of unity.

The package is organized bottom-up:

* ``field``: F_{p^2} arithmetic, roots of unity, square roots, polynomial
  root finding;
* ``linalg``: exact dense matrices over F_{p^2};
* ``algebra``: the defining relations as executable checks on matrix pairs;
* ``modules``: the two families of finite quotient modules and their
  weight/marginal machinery;
* ``classify``: feasibility, parameter orbits, irreducibility criteria and
  the independent linear-algebra oracles;
* ``cli``: the ``uawq`` command-line front end.
"""

from . import errors
from .algebra import PairRep, central_elements_check, derive_C, vee, verify_rep
from .classify import (
    OrbitSet,
    Target,
    approx_equiv,
    burnside_irreducible,
    classify_sample,
    feasible,
    feasible_target,
    intertwiner,
    irr_Vn_criterion,
    irr_W_criterion,
    s4_orbit,
    sim_related,
    simeq_closure,
    simeq_z2s4,
    solve_feasible,
    z2cubed_orbit,
)
from .field import FieldCtx, Fq2, chebyshev_T, ctx_new, is_square, poly_roots, sqrt
from .linalg import FMat
from .modules import (
    NuData,
    Params4,
    Params5,
    SeqData,
    L_closed,
    L_recurrence,
    build_Vn,
    build_W,
    check_verma_universal,
    check_W_universal,
    dump_module,
    e_vector,
    is_marginal_weight,
    marginal_test_e,
    marginal_vectors,
    nu_of,
    seq,
    w_ij,
    weight_spaces,
)

__version__ = "0.1.0"
