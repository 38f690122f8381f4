"""Invariants of Seifert-fibered homology 3-spheres, plus a numerical lab for
second-order perturbations of finite-dimensional Morse-Bott functions.

Exact side (no floating point): orbifold line-bundle arithmetic on
S^2(alpha_1..alpha_n), Seifert data and homology-sphere validation, the
lattice-vector decomposition of the critical locus of the SL(2,C)
Chern-Simons moduli problem, Poincare-polynomial assembly, and the
singularity invariants (Milnor number, geometric genus, signature, Casson
invariant) with their cross-check chain.

Numerical side: Newton continuation of perturbed critical points, Lagrange
multipliers and the localisation leading term, Morse indices from Hessian
inertia, and signed-count verification on built-in scenarios.
"""

from .exact import LaurentPoly, Rational, cp_poincare, euler_eval, hat_normalize
from .orbifold import (
    LineBundleData,
    Orbifold,
    canonical_bundle,
    dual,
    h0,
    normalize,
    orbifold_euler_char,
    power,
    tensor,
    trivial_bundle,
)
from .seifert import (
    SeifertData,
    brieskorn_seifert_data,
    bundle_log,
    n_bundle,
    validate_homology_sphere,
)
from .moduli import (
    EVector,
    ZComponent,
    enumerate_e_vectors,
    excess_poincare,
    exponent_closed_form,
    exponent_via_bundles,
    hp_poincare,
    moduli_report,
    sl2c_euler,
    sl2c_poincare,
    solve_L0_k,
    z_decomposition,
)
from .singularity import (
    brieskorn_invariants,
    casson_invariant,
    geometric_genus_divisors,
    geometric_genus_pd,
    milnor_number,
    signature_durfee,
    signature_lattice_oracle,
    verify_identity_chain,
)
from .errors import ConsistencyError

__version__ = "0.1.0"
