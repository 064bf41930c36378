"""Lyapunov-feedback state transfer along spin-1/2 chains.

Simulates single-excitation dynamics of periodically structured XY chains
under boundary-only feedback control: chain construction, spectral analysis
(numeric and period-3 closed form), control-law evaluation, Schrodinger
propagation, disorder robustness studies, and a config-driven experiment CLI.
"""

from lyapchain.chain import (
    ChainSpec,
    ChainSpecError,
    TridiagonalHamiltonian,
    build_chain_spec,
    build_hamiltonian,
    standard_period3_spec,
)
from lyapchain.control import (
    ControlSetup,
    OrderingError,
    POperator,
    Pulse,
    Termination,
    build_p_operator,
    control_fields,
    control_hamiltonians,
    square_wave_shape,
)
from lyapchain.dynamics import (
    Integration,
    IntegrationError,
    TrajectoryRecord,
    averaged_fidelity,
    free_evolution_amplitude,
    lyapunov_value,
    run_transfer,
    step,
)
from lyapchain.robustness import (
    DisorderSpec,
    EnsembleResult,
    SweepResult,
    coupling_disorder_gaps,
    disorder_sweep,
    dynamic_disorder_ensemble,
    perturb_static,
)
from lyapchain.spectral import (
    DegenerateParameterError,
    SpectralDecomposition,
    SpectrumReport,
    TargetSelection,
    UnsupportedShapeError,
    analytic_eigenpairs_period3,
    boundary_eigenpair,
    eigendecompose,
    occupation_scan,
    select_target,
    spectrum_report,
)

__version__ = "0.1.0"

__all__ = [
    "ChainSpec",
    "ChainSpecError",
    "ControlSetup",
    "DegenerateParameterError",
    "DisorderSpec",
    "EnsembleResult",
    "Integration",
    "IntegrationError",
    "OrderingError",
    "POperator",
    "Pulse",
    "SpectralDecomposition",
    "SpectrumReport",
    "SweepResult",
    "TargetSelection",
    "Termination",
    "TrajectoryRecord",
    "TridiagonalHamiltonian",
    "UnsupportedShapeError",
    "analytic_eigenpairs_period3",
    "averaged_fidelity",
    "boundary_eigenpair",
    "build_chain_spec",
    "build_hamiltonian",
    "build_p_operator",
    "control_fields",
    "control_hamiltonians",
    "coupling_disorder_gaps",
    "disorder_sweep",
    "dynamic_disorder_ensemble",
    "eigendecompose",
    "free_evolution_amplitude",
    "lyapunov_value",
    "occupation_scan",
    "perturb_static",
    "run_transfer",
    "select_target",
    "spectrum_report",
    "square_wave_shape",
    "standard_period3_spec",
    "step",
]
