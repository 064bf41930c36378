"""Chain specifications and the single-excitation Hamiltonian.

A chain of M spins is described by Larmor frequencies and nearest-neighbour
couplings that repeat with period l; individual sites or bonds may be
overridden (used for static disorder). In the one-excitation sector the
Hamiltonian is real, symmetric and tridiagonal: on-site energies on the
diagonal, couplings on the off-diagonal. Sites and bonds are 1-indexed at
every public boundary; bond b couples spins b and b+1.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np


class ChainSpecError(ValueError):
    """Raised for invalid chain parameters."""


def _check_finite(name: str, values, offset: int = 1) -> None:
    for i, x in enumerate(values):
        if not math.isfinite(x):
            raise ChainSpecError(f"{name}[{i + offset}] is not finite: {x!r}")


@dataclass(frozen=True)
class ChainSpec:
    """Periodic chain description.

    ``omega_pattern`` and ``coupling_pattern`` hold one period of on-site
    energies and couplings; site m takes the pattern value at index
    (m-1) mod period unless overridden. Instances are immutable and safe to
    share between workers.
    """

    m: int
    period: int
    omega_pattern: tuple[float, ...]
    coupling_pattern: tuple[float, ...]
    omega_overrides: dict[int, float] = field(default_factory=dict)
    coupling_overrides: dict[int, float] = field(default_factory=dict)

    @property
    def cells(self) -> int:
        """Number of complete periods n in m = n * period + remainder."""
        return self.m // self.period

    @property
    def remainder(self) -> int:
        """Leftover sites d in m = n * period + d, with 0 <= d < period."""
        return self.m % self.period

    def effective_omega(self, site: int) -> float:
        """On-site energy at ``site`` (1-based), overrides applied."""
        if not 1 <= site <= self.m:
            raise ChainSpecError(f"site {site} outside 1..{self.m}")
        if site in self.omega_overrides:
            return self.omega_overrides[site]
        return self.omega_pattern[(site - 1) % self.period]

    def effective_coupling(self, bond: int) -> float:
        """Coupling on ``bond`` (1-based, between spins bond and bond+1)."""
        if not 1 <= bond <= self.m - 1:
            raise ChainSpecError(f"bond {bond} outside 1..{self.m - 1}")
        if bond in self.coupling_overrides:
            return self.coupling_overrides[bond]
        return self.coupling_pattern[(bond - 1) % self.period]

    def omegas(self) -> np.ndarray:
        """All M effective on-site energies as an array."""
        return np.array([self.effective_omega(s) for s in range(1, self.m + 1)])

    def couplings(self) -> np.ndarray:
        """All M-1 effective couplings as an array."""
        return np.array([self.effective_coupling(b) for b in range(1, self.m)])

    def with_overrides(
        self,
        omega: dict[int, float] | None = None,
        coupling: dict[int, float] | None = None,
    ) -> "ChainSpec":
        """New spec with additional overrides merged on top of existing ones."""
        om = dict(self.omega_overrides)
        cp = dict(self.coupling_overrides)
        if omega:
            om.update(omega)
        if coupling:
            cp.update(coupling)
        return build_chain_spec(
            self.m,
            self.period,
            self.omega_pattern,
            self.coupling_pattern,
            omega_overrides=om,
            coupling_overrides=cp,
        )

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "period": self.period,
            "omega_pattern": list(self.omega_pattern),
            "coupling_pattern": list(self.coupling_pattern),
            "omega_overrides": {str(k): v for k, v in sorted(self.omega_overrides.items())},
            "coupling_overrides": {str(k): v for k, v in sorted(self.coupling_overrides.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "ChainSpec":
        try:
            m = doc["m"]
            period = doc["period"]
            omega_pattern = doc["omega_pattern"]
            coupling_pattern = doc["coupling_pattern"]
        except KeyError as exc:
            raise ChainSpecError(f"chain document missing key {exc.args[0]!r}") from None
        return build_chain_spec(
            m,
            period,
            omega_pattern,
            coupling_pattern,
            omega_overrides={int(k): float(v) for k, v in doc.get("omega_overrides", {}).items()},
            coupling_overrides={
                int(k): float(v) for k, v in doc.get("coupling_overrides", {}).items()
            },
        )

    @classmethod
    def from_json(cls, text: str) -> "ChainSpec":
        return cls.from_dict(json.loads(text))


def build_chain_spec(
    m: int,
    period: int,
    omega_pattern,
    coupling_pattern,
    omega_overrides: dict[int, float] | None = None,
    coupling_overrides: dict[int, float] | None = None,
) -> ChainSpec:
    """Validate and construct a :class:`ChainSpec`.

    Raises :class:`ChainSpecError` on dimension mismatch, non-finite values,
    out-of-range override indices, or any effective coupling equal to zero
    (a zero coupling disconnects the chain).
    """
    if not isinstance(m, int) or m < 2:
        raise ChainSpecError(f"chain length m must be an integer >= 2, got {m!r}")
    if not isinstance(period, int) or period < 1:
        raise ChainSpecError(f"period must be an integer >= 1, got {period!r}")
    omega_pattern = tuple(float(x) for x in omega_pattern)
    coupling_pattern = tuple(float(x) for x in coupling_pattern)
    if len(omega_pattern) != period:
        raise ChainSpecError(
            f"omega_pattern has length {len(omega_pattern)}, expected period {period}"
        )
    if len(coupling_pattern) != period:
        raise ChainSpecError(
            f"coupling_pattern has length {len(coupling_pattern)}, expected period {period}"
        )
    _check_finite("omega_pattern", omega_pattern)
    _check_finite("coupling_pattern", coupling_pattern)

    omega_overrides = {int(k): float(v) for k, v in (omega_overrides or {}).items()}
    coupling_overrides = {int(k): float(v) for k, v in (coupling_overrides or {}).items()}
    for site, value in omega_overrides.items():
        if not 1 <= site <= m:
            raise ChainSpecError(f"omega override site {site} outside 1..{m}")
        if not math.isfinite(value):
            raise ChainSpecError(f"omega override at site {site} is not finite: {value!r}")
    for bond, value in coupling_overrides.items():
        if not 1 <= bond <= m - 1:
            raise ChainSpecError(f"coupling override bond {bond} outside 1..{m - 1}")
        if not math.isfinite(value):
            raise ChainSpecError(f"coupling override at bond {bond} is not finite: {value!r}")

    spec = ChainSpec(
        m=m,
        period=period,
        omega_pattern=omega_pattern,
        coupling_pattern=coupling_pattern,
        omega_overrides=omega_overrides,
        coupling_overrides=coupling_overrides,
    )
    for bond in range(1, m):
        if spec.effective_coupling(bond) == 0.0:
            raise ChainSpecError(f"effective coupling at bond {bond} is zero")
    return spec


def standard_period3_spec(m: int = 29) -> ChainSpec:
    """The reference period-3 chain: Omega=(1.5, 0.75, 0.75), D=(0.15, 1, 1)."""
    return build_chain_spec(m, 3, (1.5, 0.75, 0.75), (0.15, 1.0, 1.0))


@dataclass(frozen=True, eq=False)
class TridiagonalHamiltonian:
    """Real symmetric tridiagonal matrix in the single-excitation site basis.

    ``diag`` holds the M on-site energies, ``offdiag`` the M-1 couplings.
    The basis state for an excitation at site m is the m-th coordinate
    vector. Arrays are frozen after construction.
    """

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        offdiag = np.asarray(self.offdiag, dtype=float)
        if diag.ndim != 1 or offdiag.ndim != 1 or len(offdiag) != len(diag) - 1:
            raise ChainSpecError(
                f"tridiagonal shape mismatch: diag has {diag.shape}, offdiag has {offdiag.shape}"
            )
        if len(diag) < 2:
            raise ChainSpecError("tridiagonal matrix needs at least 2 sites")
        if not np.all(np.isfinite(diag)) or not np.all(np.isfinite(offdiag)):
            raise ChainSpecError("tridiagonal entries must be finite")
        diag = diag.copy()
        offdiag = offdiag.copy()
        diag.flags.writeable = False
        offdiag.flags.writeable = False
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def size(self) -> int:
        return len(self.diag)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """Product H @ v without densifying."""
        y = self.diag * v
        y[:-1] += self.offdiag * v[1:]
        y[1:] += self.offdiag * v[:-1]
        return y

    def to_dense(self) -> np.ndarray:
        return (
            np.diag(self.diag)
            + np.diag(self.offdiag, 1)
            + np.diag(self.offdiag, -1)
        )

    @classmethod
    def from_dense(cls, a: np.ndarray, tol: float = 1e-12) -> "TridiagonalHamiltonian":
        """Rebuild from a dense matrix; rejects non-tridiagonal input."""
        a = np.asarray(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ChainSpecError(f"expected a square matrix, got shape {a.shape}")
        n = a.shape[0]
        scale = max(1.0, float(np.max(np.abs(a))))
        if np.max(np.abs(a - a.T)) > tol * scale:
            raise ChainSpecError("matrix is not symmetric")
        mask = np.tril(np.ones((n, n), dtype=bool), -2)
        if np.any(np.abs(a[mask]) > tol * scale):
            raise ChainSpecError("matrix has entries beyond the first off-diagonal")
        return cls(diag=np.diag(a).copy(), offdiag=np.diag(a, -1).copy())


def build_hamiltonian(spec: ChainSpec) -> TridiagonalHamiltonian:
    """Single-excitation Hamiltonian of ``spec``: diag[m-1] = Omega_m, offdiag[b-1] = D_b."""
    return TridiagonalHamiltonian(diag=spec.omegas(), offdiag=spec.couplings())
