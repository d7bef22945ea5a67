"""Space-curve reconstruction from curvature and torsion."""

from ._core import (
    DegenerateInput,
    DomainError,
    Error,
    Expression,
    HelixDerived,
    IntegrationDrift,
    InvalidArgument,
    ParseError,
    PoleError,
    UnknownIdentifier,
    Profile,
    align_curves,
    align_to_axis,
    closed_form_curve,
    closed_form_tangent,
    cos_k,
    cylinder_residual,
    frame_from_wz,
    fundamental_closed_form,
    helix_derived,
    integrate_fundamental,
    linear_generator,
    mobius_eval,
    real_helix_oracle,
    reconstruct_curve,
    reconstruct_frenet,
    riccati_from_linear_u,
    riccati_rhs,
    run_command,
    scheffers_tangent,
    sin_k,
    wz_from_frame,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
