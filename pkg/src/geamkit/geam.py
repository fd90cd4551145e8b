"""Construction and analysis of generalized equiangular measurements.

A GEAM is a union of N generalized equiangular tight frames, one frame per
group: group alpha holds M_alpha positive semidefinite operators that sum
to gamma_alpha * I, with all pairwise Hilbert-Schmidt overlaps fixed by
the symmetry parameters (a_alpha, b_alpha, c_alpha, f). The operators are
built from a Hermitian orthonormal basis through the group frame
operators as P = (a/d) I + tau * H.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .basis import HermitianBasis, frame_operators
from .errors import PositivityError, ValidationError
from .linalg import flip_operator

PSD_TOL = 1e-10
TRACE_COND_TOL = 1e-9
EQUIDISTANT_TOL = 1e-9


@dataclass(frozen=True)
class GeamParams:
    """Symmetry parameters of a GEAM.

    d: Hilbert space dimension.
    m: frame sizes M_alpha (each >= 2, sum = d^2 + N - 1).
    gamma: positive frame weights summing to 1.
    b: per-group purity parameters, 1/d < b_alpha <= min(d, M_alpha)/d.
    tau_sign: +1 or -1 per group, selecting the frame-operator sign.
    """

    d: int
    m: tuple
    gamma: tuple
    b: tuple
    tau_sign: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        object.__setattr__(self, "gamma", tuple(float(x) for x in self.gamma))
        object.__setattr__(self, "b", tuple(float(x) for x in self.b))
        object.__setattr__(self, "tau_sign", tuple(int(x) for x in self.tau_sign))

    @property
    def n_groups(self) -> int:
        return len(self.m)

    def validate(self):
        d, n = self.d, self.n_groups
        if d < 2:
            raise ValidationError(f"dimension must be >= 2, got {d}")
        if not (len(self.gamma) == len(self.b) == len(self.tau_sign) == n):
            raise ValidationError("m, gamma, b, tau_sign must have equal length")
        if any(m < 2 for m in self.m):
            raise ValidationError(f"every M_alpha must be >= 2, got {self.m}")
        if sum(self.m) != d * d + n - 1:
            raise ValidationError(
                f"sum(M_alpha) = {sum(self.m)} but a GEAM needs d^2 + N - 1 "
                f"= {d * d + n - 1} elements"
            )
        if any(g <= 0 for g in self.gamma):
            raise ValidationError(f"gamma must be positive, got {self.gamma}")
        if abs(sum(self.gamma) - 1.0) > 1e-12:
            raise ValidationError(f"gamma must sum to 1, got sum = {sum(self.gamma)!r}")
        for alpha, (m, b) in enumerate(zip(self.m, self.b)):
            hi = min(d, m) / d
            if not (1.0 / d < b <= hi + 1e-15):
                raise ValidationError(
                    f"b[{alpha}] = {b} outside the admissible interval "
                    f"(1/d, min(d, M)/d] = ({1.0 / d}, {hi}]"
                )
        if any(s not in (-1, 1) for s in self.tau_sign):
            raise ValidationError(f"tau_sign entries must be +-1, got {self.tau_sign}")


@dataclass(frozen=True)
class DerivedParams:
    """Parameters determined by (d, m, gamma, b).

    a: per-group operator traces, a = d * gamma / M.
    c: within-group overlap parameters, c = (M - d b) / (d (M - 1)).
    f: cross-group overlap parameter, always 1/d.
    s_per_group: squared within-frame distances S = a^2 (b - c).
    tau: signed frame coefficients, tau = sign * sqrt(S / (M (sqrt(M)+1)^2)).
    s: the common S when all groups agree within 1e-10, else None.
    """

    a: tuple
    c: tuple
    f: float
    s_per_group: tuple
    tau: tuple
    s: float | None
    _weights: tuple

    def mu(self, l: int) -> float:
        """Cumulative weight (1/d) sum_{alpha <= l} a_alpha gamma_alpha."""
        if not 1 <= l <= len(self.a):
            raise ValidationError(f"group count l = {l} out of range 1..{len(self.a)}")
        return sum(self._weights[:l])


def derive_params(params: GeamParams) -> DerivedParams:
    d = params.d
    a = tuple(d * g / m for g, m in zip(params.gamma, params.m))
    c = tuple((m - d * b) / (d * (m - 1)) for m, b in zip(params.m, params.b))
    s = tuple(aa * aa * (bb - cc) for aa, bb, cc in zip(a, params.b, c))
    if any(x <= 0 for x in s):
        raise ValidationError(f"S_alpha must be positive, got {s}")
    tau = tuple(
        sign * np.sqrt(ss / (m * (np.sqrt(m) + 1) ** 2))
        for sign, ss, m in zip(params.tau_sign, s, params.m)
    )
    common = s[0] if max(s) - min(s) <= 1e-10 else None
    weights = tuple(aa * g / d for aa, g in zip(a, params.gamma))
    return DerivedParams(a=a, c=c, f=1.0 / d, s_per_group=s, tau=tau,
                         s=common, _weights=weights)


@dataclass(frozen=True)
class Geam:
    """A concrete GEAM: parameters plus the measurement operators.

    ops[alpha] has shape (M_alpha, d, d); every operator is Hermitian PSD.
    basis_meta records the basis realization for serialization.
    """

    params: GeamParams
    derived: DerivedParams
    ops: tuple
    basis_meta: dict

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def n_groups(self) -> int:
        return self.params.n_groups

    def all_ops(self) -> np.ndarray:
        """All operators stacked into one (sum(M), d, d) array."""
        return np.concatenate(self.ops, axis=0)


def _group_ops(a, d, tau, h):
    return a / d * np.eye(d, dtype=complex)[None, :, :] + tau * h


def build_geam(basis: HermitianBasis, params: GeamParams, *,
               auto_sign: bool = False) -> Geam:
    """Assemble the measurement operators P = (a/d) I + tau H for a layout.

    With auto_sign=True the given tau_sign is tried first for each group
    and flipped if positivity fails; the signs actually used are recorded
    in the returned parameters. Construction fails rather than clamps when
    neither sign yields PSD operators.
    """
    params.validate()
    if basis.m_sizes != params.m:
        raise ValidationError(
            f"basis layout {basis.m_sizes} does not match parameters {params.m}"
        )
    derived = derive_params(params)
    frames = frame_operators(basis)
    groups = []
    signs = []
    for alpha in range(params.n_groups):
        tau = derived.tau[alpha]
        ops = _group_ops(derived.a[alpha], params.d, tau, frames.h[alpha])
        eigs = np.linalg.eigvalsh(ops)
        worst = int(np.argmin(eigs[:, 0]))
        if eigs[:, 0].min() < -PSD_TOL:
            if not auto_sign:
                raise PositivityError(alpha, worst, float(eigs[worst, 0]))
            flipped = _group_ops(derived.a[alpha], params.d, -tau, frames.h[alpha])
            eigs2 = np.linalg.eigvalsh(flipped)
            if eigs2[:, 0].min() < -PSD_TOL:
                worst2 = int(np.argmin(eigs2[:, 0]))
                raise PositivityError(alpha, worst2, float(eigs2[worst2, 0]))
            ops = flipped
            signs.append(-params.tau_sign[alpha])
        else:
            signs.append(params.tau_sign[alpha])
        groups.append(ops)
    final = GeamParams(d=params.d, m=params.m, gamma=params.gamma,
                       b=params.b, tau_sign=tuple(signs))
    return Geam(params=final, derived=derive_params(final), ops=tuple(groups),
                basis_meta=dict(basis.meta))


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    tolerance: float

    def __post_init__(self):
        object.__setattr__(self, "deviation", float(self.deviation))

    @property
    def passed(self) -> bool:
        return bool(self.deviation <= self.tolerance)


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_deviation(self) -> float:
        return max(c.deviation for c in self.checks)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            flag = "pass" if c.passed else "FAIL"
            lines.append(f"[{flag}] {c.name}: max deviation {c.deviation:.3e} "
                         f"(tol {c.tolerance:.1e})")
        return "\n".join(lines)


def validate_geam(geam: Geam, tol: float = TRACE_COND_TOL) -> ValidationReport:
    """Check the defining conditions of a GEAM numerically.

    Covers the tight-frame condition per group, the element count, all
    four trace conditions, and positivity. Failures are reported, not
    raised.
    """
    p, der = geam.params, geam.derived
    d = p.d
    checks = []

    dev = max(np.abs(grp.sum(axis=0) - g * np.eye(d)).max()
              for grp, g in zip(geam.ops, p.gamma))
    checks.append(CheckResult("tight frame: sum_k P = gamma I per group", dev, PSD_TOL))

    count_dev = abs(sum(p.m) - (d * d + p.n_groups - 1))
    checks.append(CheckResult("element count = d^2 + N - 1", float(count_dev), 0.5))

    dev = max(abs(np.trace(op).real - der.a[al])
              for al, grp in enumerate(geam.ops) for op in grp)
    checks.append(CheckResult("Tr P = a", dev, tol))

    dev = 0.0
    for al, grp in enumerate(geam.ops):
        g2 = np.einsum("kij,kji->k", grp, grp).real
        dev = max(dev, np.abs(g2 - p.b[al] * der.a[al] ** 2).max())
    checks.append(CheckResult("Tr P^2 = b a^2", dev, tol))

    dev = 0.0
    for al, grp in enumerate(geam.ops):
        overlaps = np.einsum("kij,lji->kl", grp, grp).real
        off = overlaps[~np.eye(len(grp), dtype=bool)]
        dev = max(dev, np.abs(off - der.c[al] * der.a[al] ** 2).max())
    checks.append(CheckResult("Tr P P' = c a^2 within a group", dev, tol))

    dev = 0.0
    for al, be in itertools.combinations(range(p.n_groups), 2):
        overlaps = np.einsum("kij,lji->kl", geam.ops[al], geam.ops[be]).real
        target = der.f * der.a[al] * der.a[be]
        dev = max(dev, np.abs(overlaps - target).max())
    if p.n_groups > 1:
        checks.append(CheckResult("Tr P P' = f a a' across groups", dev, tol))

    dev = -min(np.linalg.eigvalsh(grp)[:, 0].min() for grp in geam.ops)
    checks.append(CheckResult("P >= 0 (negated min eigenvalue)", max(dev, 0.0), PSD_TOL))

    return ValidationReport(checks=tuple(checks))


@dataclass(frozen=True)
class EquidistanceResult:
    """Within-frame squared Frobenius distances, group by group.

    Elements of one frame are pairwise equidistant by construction; the
    measurement is called equidistant when that distance is the same
    number S for every frame. Distances between elements of different
    frames are generally smaller and are reported separately.
    """

    s_per_group: tuple
    equidistant: bool
    s: float | None
    cross_group_range: tuple | None


def equidistance(geam: Geam, tol: float = EQUIDISTANT_TOL) -> EquidistanceResult:
    """Measure all pairwise distances (1/2) Tr[(P - P')^2] of a GEAM."""
    per_group = []
    for grp in geam.ops:
        dists = [0.5 * np.trace((x - y) @ (x - y)).real
                 for x, y in itertools.combinations(grp, 2)]
        if max(dists) - min(dists) > tol:
            raise ValidationError("within-frame distances disagree; not a valid GEAM")
        per_group.append(float(np.mean(dists)))
    cross = None
    if geam.n_groups > 1:
        vals = []
        for al, be in itertools.combinations(range(geam.n_groups), 2):
            for x in geam.ops[al]:
                for y in geam.ops[be]:
                    vals.append(0.5 * np.trace((x - y) @ (x - y)).real)
        cross = (float(min(vals)), float(max(vals)))
    flag = max(per_group) - min(per_group) <= tol
    return EquidistanceResult(
        s_per_group=tuple(per_group),
        equidistant=flag,
        s=float(np.mean(per_group)) if flag else None,
        cross_group_range=cross,
    )


@dataclass(frozen=True)
class DesignCheckResult:
    kappa_plus: float
    kappa_minus: float
    residual: float


def conical_design_check(geam: Geam) -> DesignCheckResult:
    """Verify sum_P P (x) P = kappa_+ I (x) I + kappa_- F for equidistant GEAMs.

    kappa_+ = mu_N - S/d and kappa_- = S, with F the flip operator.
    Raises when the input is not equidistant.
    """
    eq = equidistance(geam)
    if not eq.equidistant:
        raise ValidationError(
            f"conical design check needs an equidistant GEAM, got S per group "
            f"{eq.s_per_group}"
        )
    d = geam.d
    s = eq.s
    mu_n = geam.derived.mu(geam.n_groups)
    kp, km = mu_n - s / d, s
    total = np.zeros((d * d, d * d), dtype=complex)
    for op in geam.all_ops():
        total += np.kron(op, op)
    resid = np.abs(total - kp * np.eye(d * d) - km * flip_operator(d)).max()
    return DesignCheckResult(kappa_plus=float(kp), kappa_minus=float(km),
                             residual=float(resid))


def coincidence_index(geam: Geam, x: np.ndarray, l: int) -> float:
    """Partial index of coincidence sum_{alpha<=l} sum_k |Tr(P_{alpha,k} X)|^2."""
    if not 1 <= l <= geam.n_groups:
        raise ValidationError(f"l = {l} out of range 1..{geam.n_groups}")
    total = 0.0
    for grp in geam.ops[:l]:
        overlaps = np.einsum("kij,ji->k", grp, x)
        total += float(np.sum(np.abs(overlaps) ** 2))
    return total


def coincidence_bound(geam: Geam, x: np.ndarray, l: int) -> float:
    """Upper bound S [Tr(X^dag X) - 1/d] + mu_l for the partial coincidence index.

    Valid for unit-trace X (the convention under which the bound is an
    equality at l = N); general X obey the same bound with |Tr X|^2
    weights, which reduces to this form at Tr X = 1.
    """
    if not 1 <= l <= geam.n_groups:
        raise ValidationError(f"l = {l} out of range 1..{geam.n_groups}")
    eq = equidistance(geam)
    if not eq.equidistant:
        raise ValidationError("coincidence bound requires an equidistant GEAM")
    hs_norm = np.trace(x.conj().T @ x).real
    return float(eq.s * (hs_norm - 1.0 / geam.d) + geam.derived.mu(l))
