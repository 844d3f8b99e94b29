"""Phase-space geometry on T*R^d.

Points are handled through the complex chart z = x + i xi, under which the
harmonic-oscillator flow is z -> exp(-it) z and U(d) acts complex-linearly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

__all__ = [
    "PhasePoint",
    "QuantumNumbers",
    "UnitaryMap",
    "OrbitFrame",
    "to_complex",
    "from_complex",
    "hamiltonian",
    "gamma0",
    "apply_unitary",
    "rotate_in_orbit_plane",
    "build_frame",
    "scaling_point",
    "sample_cp1",
    "cp1_lattice",
]

_GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0
# Class [1 : i] of the reference orbit and its Hermitian complement.
E0 = np.array([1.0, 1.0j]) / math.sqrt(2.0)
E0_PERP = np.array([1.0j, 1.0]) / math.sqrt(2.0)


def _frozen(a, dtype=float):
    arr = np.array(a, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class PhasePoint:
    """A point (x, xi) of T*R^d, d >= 2."""

    x: np.ndarray
    xi: np.ndarray

    def __post_init__(self):
        x = _frozen(self.x).ravel()
        xi = _frozen(self.xi).ravel()
        if x.shape != xi.shape:
            raise DomainError("x and xi must have the same length")
        if x.size < 2:
            raise DomainError("phase points need d >= 2")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(xi))):
            raise DomainError("phase point coordinates must be finite")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "xi", xi)

    @property
    def d(self) -> int:
        return self.x.size

    @classmethod
    def from_array(cls, coords) -> "PhasePoint":
        """Build from a flat (x_1..x_d, xi_1..xi_d) sequence."""
        c = np.asarray(coords, dtype=float).ravel()
        if c.size % 2:
            raise DomainError("need an even number of coordinates")
        d = c.size // 2
        return cls(c[:d], c[d:])

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.x, self.xi])

    def __eq__(self, other):
        if not isinstance(other, PhasePoint):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.xi, other.xi)

    def __hash__(self):
        return hash((self.x.tobytes(), self.xi.tobytes()))


@dataclass(frozen=True)
class QuantumNumbers:
    """Level N, dimension d and energy E, with E = hbar (N + d/2)."""

    N: int
    d: int = 2
    E: float = 1.0

    def __post_init__(self):
        if not isinstance(self.N, (int, np.integer)) or self.N < 0:
            raise DomainError(f"N must be a nonnegative integer, got {self.N!r}")
        if not isinstance(self.d, (int, np.integer)) or self.d < 2:
            raise DomainError(f"d must be an integer >= 2, got {self.d!r}")
        if not (self.E > 0 and math.isfinite(self.E)):
            raise DomainError(f"E must be positive and finite, got {self.E!r}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "E", float(self.E))

    @property
    def hbar(self) -> float:
        return self.E / (self.N + self.d / 2.0)

    @property
    def energy_2d(self) -> float:
        """Energy of the planar factor at this hbar, hbar (N + 1)."""
        return self.hbar * (self.N + 1)


@dataclass(frozen=True)
class UnitaryMap:
    """Special unitary d x d matrix acting on the complex chart."""

    U: np.ndarray
    tol: float = field(default=1e-12, compare=False)

    def __post_init__(self):
        U = _frozen(self.U, complex)
        if U.ndim != 2 or U.shape[0] != U.shape[1]:
            raise DomainError("U must be a square matrix")
        eye = np.eye(U.shape[0])
        if np.max(np.abs(U.conj().T @ U - eye)) > self.tol:
            raise DomainError("U is not unitary")
        if abs(np.linalg.det(U) - 1.0) > self.tol:
            raise DomainError("U does not have determinant 1")
        object.__setattr__(self, "U", U)

    @property
    def d(self) -> int:
        return self.U.shape[0]

    @classmethod
    def identity(cls, d: int = 2) -> "UnitaryMap":
        return cls(np.eye(d, dtype=complex))


@dataclass(frozen=True)
class OrbitFrame:
    """On-orbit base point with 2(d-1) normal vectors of norm sqrt(2E).

    Normals come in pairs (i w_k, w_k) for a Hermitian-orthonormal basis w_k
    of the complement of the base, built by Gram-Schmidt in a fixed order.
    """

    base: PhasePoint
    normals: tuple
    E: float

    @property
    def d(self) -> int:
        return self.base.d


# ---------------------------------------------------------------------------
# chart and elementary maps
# ---------------------------------------------------------------------------


def to_complex(p: PhasePoint) -> np.ndarray:
    return p.x + 1j * p.xi


def from_complex(z) -> PhasePoint:
    z = np.asarray(z, dtype=complex)
    return PhasePoint(z.real, z.imag)


def hamiltonian(p: PhasePoint) -> float:
    """H = (|x|^2 + |xi|^2) / 2."""
    return 0.5 * float(np.dot(p.x, p.x) + np.dot(p.xi, p.xi))


def gamma0(t: float, E: float) -> PhasePoint:
    """Reference orbit sqrt(E) (cos t, sin t, -sin t, cos t)."""
    if not E > 0:
        raise DomainError("E must be positive")
    r = math.sqrt(E)
    c, s = math.cos(t), math.sin(t)
    return PhasePoint([r * c, r * s], [-r * s, r * c])


def apply_unitary(U: UnitaryMap, p: PhasePoint, adjoint: bool = False) -> PhasePoint:
    """z -> U z, or U^dagger z when ``adjoint`` is set."""
    if not isinstance(U, UnitaryMap):
        U = UnitaryMap(U)
    if U.d != p.d:
        raise DomainError("dimension mismatch between U and p")
    M = U.U.conj().T if adjoint else U.U
    return from_complex(M @ to_complex(p))


def rotate_in_orbit_plane(theta: float, p: PhasePoint) -> PhasePoint:
    """Apply the planar rotation g_theta to the x and xi blocks together."""
    if p.d != 2:
        raise DomainError("orbit-plane rotation is defined for d = 2")
    c, s = math.cos(theta), math.sin(theta)
    g = np.array([[c, -s], [s, c]])
    return PhasePoint(g @ p.x, g @ p.xi)


# ---------------------------------------------------------------------------
# frames and scaling coordinates
# ---------------------------------------------------------------------------


def _hermitian_complement(z: np.ndarray) -> list:
    """Orthonormal basis of {w : <z, w> = 0} via Gram-Schmidt on e_1..e_d."""
    d = z.size
    basis = [z / np.linalg.norm(z)]
    out = []
    for k in range(d):
        w = np.zeros(d, dtype=complex)
        w[k] = 1.0
        for b in basis:
            w = w - np.vdot(b, w) * b
        n = np.linalg.norm(w)
        if n < 1e-8:
            continue
        w = w / n
        # second pass for numerical orthogonality
        for b in basis:
            w = w - np.vdot(b, w) * b
        w = w / np.linalg.norm(w)
        basis.append(w)
        out.append(w)
        if len(out) == d - 1:
            break
    return out


def build_frame(p: PhasePoint, E: float) -> OrbitFrame:
    """Normal frame of the energy surface orbit through ``p``."""
    if not E > 0:
        raise DomainError("E must be positive")
    if abs(hamiltonian(p) - E) > 1e-9 * E:
        raise DomainError("build_frame needs a point on the energy surface H = E")
    z = to_complex(p)
    r = math.sqrt(2.0 * E)
    normals = []
    for w in _hermitian_complement(z):
        normals.append(from_complex(1j * r * w))
        normals.append(from_complex(r * w))
    return OrbitFrame(base=p, normals=tuple(normals), E=float(E))


def scaling_point(frame: OrbitFrame, u: float, w) -> PhasePoint:
    """(1 + u) base + sum_i w_i v_i."""
    w = np.atleast_1d(np.asarray(w, dtype=float))
    if w.size != len(frame.normals):
        raise DomainError(f"expected {len(frame.normals)} transverse coordinates")
    c = (1.0 + u) * frame.base.as_array()
    for wi, v in zip(w, frame.normals):
        c = c + wi * v.as_array()
    return PhasePoint.from_array(c)


# ---------------------------------------------------------------------------
# CP^1 sampling
# ---------------------------------------------------------------------------


def cp1_lattice(count: int) -> np.ndarray:
    """Unit vectors f_k in C^2 on a spherical Fibonacci lattice, shape (count, 2).

    The Hopf map sends f_k to a point of S^2 whose height is uniform, so the
    classes [f_k] are asymptotically Fubini-Study distributed.
    """
    if count < 1:
        raise DomainError("count must be positive")
    k = np.arange(count)
    cos_t = 1.0 - (2.0 * k + 1.0) / count
    theta = np.arccos(cos_t)
    phi = 2.0 * math.pi * np.mod(k / _GOLDEN, 1.0)
    return np.stack([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)], axis=1)


def _lift(f) -> np.ndarray:
    a, b = f
    F = np.array([[a, -np.conj(b)], [b, np.conj(a)]])
    E = np.stack([E0, E0_PERP], axis=1)
    return F @ E.conj().T


def sample_cp1(index: int, count: int) -> UnitaryMap:
    """SU(2) element sending the class [1 : i] to the index-th lattice class."""
    if not (0 <= index < count):
        raise DomainError(f"index {index} out of range for count {count}")
    k = index
    cos_t = 1.0 - (2.0 * k + 1.0) / count
    theta = math.acos(cos_t)
    phi = 2.0 * math.pi * ((k / _GOLDEN) % 1.0)
    f = (math.cos(theta / 2), complex(math.cos(phi), math.sin(phi)) * math.sin(theta / 2))
    return UnitaryMap(_lift(f))
