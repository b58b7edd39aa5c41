"""so(2,2) spectrum-generating-algebra construction of exactly solvable
position-dependent-mass potentials, plus an independent finite-difference
verification harness.

Layers:

    profiles   mass profiles m(x) and the mass integral mu(x)
    taylor     grid-sampled derivative-tower (jet) arithmetic
    algebra    six-generator differential realization, commutators, invariants
    matching   generating function, case solutions y(x), ordering corrections
    catalog    the thirteen solvable potentials V(mu) with analytic energies
    solver     mass-ordered kinetic discretization and bound-state eigensolves
    verify     end-to-end runs, invariance sweeps, reports, exports
    cli        the `sga` command
"""

from .algebra import (AlgebraSignature, BasisState, CasimirResult, RealizationFns,
                      apply_generator, build_realization, casimir_apply,
                      commutator_residual, gaussian_state, second_casimir_apply,
                      structure_residuals)
from .catalog import (EnergySpec, PotentialModel, analytic_energy, bound_threshold,
                      catalog_listing, eval_V, invert_energy, isospectral_pairs,
                      make_potential, ordering_correction)
from .errors import (DomainError, NumericsError, RangeError, SingularityError,
                     ValidationError)
from .matching import (SgaCase, YSolution, case_constant, effective_correction,
                       fg_functions, generating_function, generating_function_general,
                       nu_pair_from_rt, quantum_map, solve_y)
from .profiles import MassProfile, load_tabulated_csv, make_profile, mu_inverse, mu_of
from .solver import (Grid, ORDERINGS, OrderingParams, SpectrumReport,
                     build_hamiltonian, refine, solve_spectrum)
from .verify import (VerificationReport, export_curve, export_report,
                     run_algebra_check, run_verification, total_potential)

__version__ = "0.1.0"
