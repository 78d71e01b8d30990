"""Single-photon transport through a coupled-resonator array whose sites 0
and 1 both couple to one two-level system."""

from ._core import (
    ConfigError,
    DomainError,
    IntegrationError,
    ModelParams,
    SingularSystemError,
    decompose,
    dispersion,
    evolve_wavepacket,
    group_velocity,
    mixing_angle,
    momentum_from_energy,
    path_basis,
    reflection_amplitude,
    resonant_transmission,
    run_grid,
    run_sweep,
    scattering_coefficients,
    solve_path_space,
    solve_scattering_exact,
    t_path_B,
    t_path_D,
    transmission_amplitude,
    transmission_zero_energy,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
