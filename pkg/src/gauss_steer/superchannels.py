"""Gaussian superchannels: maps sending Gaussian channels to Gaussian channels.

A superchannel is represented by (A, E, Y, nu) with E orthogonal and acts as

    K -> A K Sigma E^T Sigma,   M -> A M A^T + Y,   d -> A d + nu.

It always factors as post-channel (A, Y, nu) after pre-channel
(Sigma E^T Sigma, 0, 0).  The two certified classes here are the free
operations of the steering resource picture: unsteerable superchannels
(send unsteerable channels to unsteerable channels; a PSD plus an equality
condition suffices) and maximal unsteerable superchannels (send maximal
unsteerable channels to maximal unsteerable channels; two quantified
conditions suffice).  Both certificates are sufficient only, so a failed
check never proves a superchannel is outside the class.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .channels import (
    GaussianChannel,
    is_maximal_unsteerable,
    unsteerable_check,
)
from .errors import (
    DimensionError,
    InvalidParameterError,
    InvalidSuperchannelError,
    NotHermitianError,
)
from .quantifier import (
    QuantifiedCondition,
    SolverConfig,
    Verdict,
    VerdictState,
    decide,
)
from .states import DEFAULT_TOL, GENERATOR_MARGIN
from .symplectic import (
    ModePartition,
    _opnorm,
    is_psd,
    min_eigenvalue,
    omega,
    omega_hat,
    random_orthosymplectic,
    sigma,
)


@dataclass(frozen=True, eq=False)
class GaussianSuperchannel:
    """Superchannel data (A, E, Y, nu) over a mode partition.

    Construction checks shapes and the symmetry of Y only; orthogonality of
    E and the admissibility inequalities are a separate certificate
    (:func:`is_valid_superchannel`).
    """

    partition: ModePartition
    A: np.ndarray
    E: np.ndarray
    Y: np.ndarray
    nu: Optional[np.ndarray] = None

    def __post_init__(self):
        dim = self.partition.dim
        a = np.array(self.A, dtype=float)
        e = np.array(self.E, dtype=float)
        y = np.array(self.Y, dtype=float)
        for name, arr in (("A", a), ("E", e), ("Y", y)):
            if arr.shape != (dim, dim):
                raise DimensionError(f"{name} shape {arr.shape} != 2N = {dim}")
        if _opnorm(y - y.T) > 1e-8 * (1.0 + _opnorm(y)):
            raise NotHermitianError("Y must be symmetric")
        y = 0.5 * (y + y.T)
        nu = np.zeros(dim) if self.nu is None else np.array(self.nu, dtype=float)
        if nu.shape != (dim,):
            raise DimensionError(f"nu shape {nu.shape}, expected ({dim},)")
        for arr in (a, e, y, nu):
            arr.setflags(write=False)
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "E", e)
        object.__setattr__(self, "Y", y)
        object.__setattr__(self, "nu", nu)


def identity_superchannel(partition: ModePartition) -> GaussianSuperchannel:
    dim = partition.dim
    return GaussianSuperchannel(
        partition, np.eye(dim), np.eye(dim), np.zeros((dim, dim))
    )


def is_valid_superchannel(
    sc: GaussianSuperchannel, tol: float = DEFAULT_TOL
) -> bool:
    """Admissibility: E orthogonal plus the two PSD conditions on (A, Y) and E."""
    dim = sc.partition.dim
    if _opnorm(sc.E @ sc.E.T - np.eye(dim)) > tol * (1.0 + _opnorm(sc.E)):
        return False
    om = omega(sc.partition.modes)
    if not is_psd(sc.Y + 1j * om - 1j * sc.A @ om @ sc.A.T, tol):
        return False
    return bool(is_psd(1j * om - 1j * sc.E @ om @ sc.E.T, tol))


def _require_valid(sc: GaussianSuperchannel, tol: float = DEFAULT_TOL) -> None:
    if not is_valid_superchannel(sc, tol):
        raise InvalidSuperchannelError(
            "superchannel fails its admissibility conditions"
        )


def apply_to_channel(
    sc: GaussianSuperchannel, channel: GaussianChannel
) -> GaussianChannel:
    """Image of a channel under the superchannel."""
    if sc.partition.dim != channel.partition.dim:
        raise DimensionError("superchannel and channel sizes differ")
    _require_valid(sc)
    sig = sigma(sc.partition.modes)
    return GaussianChannel(
        channel.partition,
        sc.A @ channel.K @ sig @ sc.E.T @ sig,
        sc.A @ channel.M @ sc.A.T + sc.Y,
        sc.A @ channel.d + sc.nu,
    )


def decompose(
    sc: GaussianSuperchannel,
) -> Tuple[GaussianChannel, GaussianChannel]:
    """Canonical (pre, post) channel pair realizing the superchannel.

    Applying the superchannel equals composing post after the input channel
    after pre, exactly, for every input channel.
    """
    _require_valid(sc)
    part = sc.partition
    sig = sigma(part.modes)
    dim = part.dim
    pre = GaussianChannel(part, sig @ sc.E.T @ sig, np.zeros((dim, dim)))
    post = GaussianChannel(part, sc.A, sc.Y, sc.nu)
    return pre, post


def us_check(sc: GaussianSuperchannel, tol: float = DEFAULT_TOL):
    """Evidence pair for the unsteerable-superchannel certificate.

    Returns (PsdCheck for Y + i omega_hat - A (i omega_hat) A^T, residual
    norm of omega_hat - E omega_hat E^T).  The second condition is an
    equality: the PSD form of the E condition involves a traceless Hermitian
    matrix, which is positive semidefinite only when it vanishes.
    """
    _require_valid(sc, tol)
    oh = omega_hat(sc.partition)
    psd = is_psd(sc.Y + 1j * oh - 1j * sc.A @ oh @ sc.A.T, tol)
    residual = float(np.abs(oh - sc.E @ oh @ sc.E.T).max())
    return psd, residual


def us_sufficient(sc: GaussianSuperchannel, tol: float = DEFAULT_TOL) -> bool:
    """Sufficient certificate for an unsteerable superchannel."""
    psd, residual = us_check(sc, tol)
    return bool(psd) and residual <= 1e-9 * (1.0 + _opnorm(sc.E))


def _combine(first: Verdict, second: Verdict) -> Verdict:
    """Conjunction of two verdicts: any violation wins, then any undecided."""
    for v in (first, second):
        if v.violated:
            return v
    if first.undecided or second.undecided:
        return Verdict(VerdictState.UNDECIDED, min(first.value, second.value))
    return Verdict(VerdictState.HOLDS, min(first.value, second.value))


def mus_conditions(
    sc: GaussianSuperchannel,
) -> Tuple[QuantifiedCondition, QuantifiedCondition]:
    """The two quantified conditions certifying a maximal unsteerable superchannel."""
    oh = omega_hat(sc.partition)
    sig = sigma(sc.partition.modes)
    f = sig @ sc.E.T @ sig
    cond_post = QuantifiedCondition(sc.Y, [sc.A @ oh @ sc.A.T], oh)
    cond_pre = QuantifiedCondition(np.zeros_like(oh), [f @ oh @ f.T], oh)
    return cond_post, cond_pre


def mus_sufficient(
    sc: GaussianSuperchannel, cfg: SolverConfig = SolverConfig()
) -> Verdict:
    """Sufficient certificate for a maximal unsteerable superchannel.

    HOLDS only when both quantified conditions hold; a violation of either
    is reported with its witness.
    """
    _require_valid(sc)
    cond_post, cond_pre = mus_conditions(sc)
    return _combine(decide(cond_post, cfg), decide(cond_pre, cfg))


def chain_sufficient(
    sc: GaussianSuperchannel,
    cfg: SolverConfig = SolverConfig(),
    mode: str = "US",
) -> Verdict:
    """Certify via the canonical decomposition: both factor channels free.

    ``mode="US"`` checks the PSD unsteerable-channel certificate on the pre
    and post channels; ``mode="MUS"`` runs the quantified maximal
    unsteerability check on both.  Only the canonical factorization is
    searched, so as with the other certificates a non-HOLDS outcome proves
    nothing about the superchannel itself.
    """
    pre, post = decompose(sc)
    if mode == "US":
        verdicts = []
        for ch in (pre, post):
            check = unsteerable_check(ch, DEFAULT_TOL)
            if check:
                verdicts.append(Verdict(VerdictState.HOLDS, check.min_eigenvalue))
            else:
                verdicts.append(
                    Verdict(
                        VerdictState.VIOLATED, check.min_eigenvalue, check.witness
                    )
                )
        return _combine(*verdicts)
    if mode == "MUS":
        return _combine(
            is_maximal_unsteerable(pre, cfg), is_maximal_unsteerable(post, cfg)
        )
    raise InvalidParameterError(f"mode must be 'US' or 'MUS', got {mode!r}")


def random_superchannel(partition: ModePartition, seed: int) -> GaussianSuperchannel:
    """Deterministic random valid superchannel.

    E is drawn orthosymplectic: admissibility forces i omega - i E omega E^T
    to be both PSD and traceless, hence zero, so E must preserve the
    symplectic form on top of being orthogonal.  Y is eigen-shifted past its
    PSD condition with the usual generator margin.
    """
    rng = np.random.default_rng(seed)
    dim = partition.dim
    a = rng.uniform(-1.5, 1.5, (dim, dim))
    e = random_orthosymplectic(partition.modes, rng)
    g = rng.standard_normal((dim, dim))
    y = g @ g.T
    om = omega(partition.modes)
    lam = min_eigenvalue(y + 1j * om - 1j * a @ om @ a.T)
    y = y + max(0.0, -lam + GENERATOR_MARGIN) * np.eye(dim)
    nu = rng.standard_normal(dim)
    return GaussianSuperchannel(partition, a, e, y, nu)
