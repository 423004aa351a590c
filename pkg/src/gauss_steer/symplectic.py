"""Symplectic-form primitives and Hermitian positive-semidefinite certificates.

Everything in this package uses the interleaved quadrature ordering
(q1, p1, ..., qN, pN), so an N-mode object is a 2N x 2N matrix whose
2x2 diagonal blocks belong to individual modes.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionError, NotHermitianError, SingularBlockError

# Default relative tolerance for PSD certificates.  The classification
# criteria are exact inequalities; inputs are floating point.
PSD_TOL = 1e-9

# Relative asymmetry above which an input is rejected instead of symmetrized.
HERMITIAN_ATOL = 1e-8

_SINGLE_MODE_FORM = np.array([[0.0, 1.0], [-1.0, 0.0]])


@dataclass(frozen=True)
class ModePartition:
    """An (m + n) split of an N-mode system into subsystems A and B.

    Subsystem A holds the first m modes, B the remaining n.  All steering
    predicates in this package are directional A -> B; use the swap helpers
    in :mod:`gauss_steer.states` / :mod:`gauss_steer.channels` for the
    reverse direction.
    """

    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise DimensionError("mode counts must be integers")
        if self.m < 0 or self.n < 1:
            raise DimensionError(
                f"need m >= 0 and n >= 1, got (m, n) = ({self.m}, {self.n})"
            )

    @property
    def modes(self) -> int:
        return self.m + self.n

    @property
    def dim(self) -> int:
        """Side length of matrices over this system (2 per mode)."""
        return 2 * (self.m + self.n)

    def swapped(self) -> "ModePartition":
        if self.m < 1:
            raise DimensionError("cannot swap a partition with an empty A side")
        return ModePartition(self.n, self.m)


def omega(n_modes: int) -> np.ndarray:
    """Symplectic form on ``n_modes`` modes: block diagonal [[0, 1], [-1, 0]]."""
    if n_modes < 1:
        raise DimensionError("omega needs at least one mode")
    return np.kron(np.eye(n_modes), _SINGLE_MODE_FORM)


def omega_hat(partition: ModePartition) -> np.ndarray:
    """Partial symplectic form: zeros on the A block, omega(n) on the B block.

    This is the matrix at the heart of every steering criterion here: a
    state is A -> B unsteerable exactly when its covariance matrix plus
    i times this form is positive semidefinite.
    """
    out = np.zeros((partition.dim, partition.dim))
    out[2 * partition.m :, 2 * partition.m :] = omega(partition.n)
    return out


def sigma(n_modes: int) -> np.ndarray:
    """Momentum-flip matrix diag(1, -1, 1, -1, ...) on ``n_modes`` modes."""
    if n_modes < 1:
        raise DimensionError("sigma needs at least one mode")
    return np.kron(np.eye(n_modes), np.diag([1.0, -1.0]))


def direct_sum(*blocks: np.ndarray) -> np.ndarray:
    """Block-diagonal direct sum of square matrices."""
    sizes = [b.shape[0] for b in blocks]
    total = sum(sizes)
    dtype = np.result_type(*[b.dtype for b in blocks])
    out = np.zeros((total, total), dtype=dtype)
    pos = 0
    for b, s in zip(blocks, sizes):
        out[pos : pos + s, pos : pos + s] = b
        pos += s
    return out


def _as_square(h) -> np.ndarray:
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {h.shape}")
    return h


def _opnorm(h: np.ndarray) -> float:
    """Max-row-sum norm; cheap and adequate for relative thresholds."""
    if h.size == 0:
        return 0.0
    return float(np.abs(h).sum(axis=1).max())


def hermitian_part(h) -> np.ndarray:
    """Return (H + H^dag)/2, rejecting inputs that are not close to Hermitian.

    Asymmetry beyond ``HERMITIAN_ATOL`` times the norm of H is treated as an
    input error rather than silently averaged away.
    """
    h = _as_square(h)
    sym = 0.5 * (h + h.conj().T)
    asym = _opnorm(h - h.conj().T)
    if asym > HERMITIAN_ATOL * (1.0 + _opnorm(h)):
        raise NotHermitianError(
            f"matrix deviates from Hermitian by {asym:.3e} (norm {_opnorm(h):.3e})"
        )
    return sym


def min_eigenvalue(h) -> float:
    """Smallest eigenvalue of the Hermitian part of ``h``.

    Deterministic for a fixed input (LAPACK dense solver, no iteration
    seeds involved).
    """
    return float(np.linalg.eigvalsh(hermitian_part(h))[0])


@dataclass(frozen=True)
class PsdCheck:
    """Outcome of a positive-semidefiniteness certificate.

    ``witness`` is the eigenvector of the most negative eigenvalue and is
    present exactly when the check fails.
    """

    ok: bool
    min_eigenvalue: float
    threshold: float
    witness: Optional[np.ndarray] = None

    def __bool__(self) -> bool:
        return self.ok


def is_psd(h, tol: float = PSD_TOL) -> PsdCheck:
    """Certify H >= 0 up to a relative threshold -tol * (1 + ||H||).

    The relative form keeps boundary objects (pure lossy channels, the
    identity channel) on the PSD side when they evaluate to exact zeros
    perturbed by rounding.
    """
    sym = hermitian_part(h)
    vals, vecs = np.linalg.eigh(sym)
    lam = float(vals[0])
    threshold = tol * (1.0 + _opnorm(sym))
    if lam >= -threshold:
        return PsdCheck(True, lam, threshold)
    return PsdCheck(False, lam, threshold, witness=vecs[:, 0].copy())


def schur_complement(w, head: int, allow_pinv: bool = False) -> np.ndarray:
    """Schur complement W11 - W12 W22^{-1} W12^dag for a 2x2 block split.

    ``head`` is the side length of the leading block W11.  A numerically
    singular trailing block raises :class:`SingularBlockError` unless
    ``allow_pinv`` declares the pseudo-inverse fallback acceptable.
    """
    w = _as_square(np.asarray(w, dtype=complex))
    d = w.shape[0]
    if not 0 < head < d:
        raise DimensionError(f"block split {head} out of range for size {d}")
    w11 = w[:head, :head]
    w12 = w[:head, head:]
    w22 = w[head:, head:]
    if allow_pinv:
        inv22 = np.linalg.pinv(w22)
    else:
        if np.linalg.cond(w22) > 1e12:
            raise SingularBlockError(
                "trailing block is numerically singular; pass allow_pinv=True "
                "to fall back to the pseudo-inverse"
            )
        inv22 = np.linalg.inv(w22)
    return w11 - w12 @ inv22 @ w12.conj().T


def random_orthosymplectic(n_modes: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random matrix that is both orthogonal and symplectic.

    Built from a random N x N unitary U = X + iY via the interleaved
    2x2-block embedding [[X, -Y], [Y, X]] per mode pair, the real
    representation of the passive (beam-splitter/phase) group.
    """
    z = rng.standard_normal((n_modes, n_modes)) + 1j * rng.standard_normal(
        (n_modes, n_modes)
    )
    q, r = np.linalg.qr(z)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    u = q * phases.conj()
    out = np.zeros((2 * n_modes, 2 * n_modes))
    x, y = u.real, u.imag
    out[0::2, 0::2] = x
    out[0::2, 1::2] = -y
    out[1::2, 0::2] = y
    out[1::2, 1::2] = x
    return out
