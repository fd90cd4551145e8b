"""Linear maps built from a GEAM and their Choi-matrix witnesses.

Superoperators are stored as dense d^2 x d^2 matrices acting on
row-major vectorized operators: column index (m, n) is the input matrix
unit |m><n|, row index (i, j) the output entry. The map family consists
of the depolarizing map X -> Tr(X) I/d, one frame map per group built
from an orthogonal rotation that fixes the all-ones vector, and signed
combinations of these that are k-positive for a suitable scalar weight
on the depolarizing part.
"""

import hashlib
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .errors import ValidationError
from .geam import Geam, equidistance
from .linalg import as_rng, vec

HERMITICITY_PRESERVING_TOL = 1e-10
ROTATION_TOL = 1e-10
DUAL_ROUTE_TOL = 1e-10


def _ones_complement(m: int) -> np.ndarray:
    """Deterministic orthonormal basis of the complement of (1, ..., 1)."""
    cols = [np.ones(m) / np.sqrt(m)]
    for i in range(m):
        v = np.zeros(m)
        v[i] = 1.0
        for u in cols:
            v -= (u @ v) * u
        norm = np.linalg.norm(v)
        if norm > 1e-12:
            cols.append(v / norm)
        if len(cols) == m:
            break
    return np.array(cols).T


def random_rotation(m: int, seed) -> np.ndarray:
    """Random m x m orthogonal matrix fixing the all-ones vector.

    Drawn as exp(A) on the orthogonal complement of (1, ..., 1), with A a
    random antisymmetric matrix, composed half the time with a reflection
    of the first complement direction so both orthogonal components are
    reachable. For m = 2 the only two solutions are the identity and the
    swap, and a seeded draw returns one of them. Deterministic per seed.
    """
    if m < 2:
        raise ValidationError(f"rotation size must be >= 2, got {m}")
    rng = as_rng(seed)
    q = _ones_complement(m)
    r = m - 1
    a = rng.standard_normal((r, r))
    a = a - a.T
    block = expm(a)
    if rng.random() < 0.5:
        block = np.diag([-1.0] + [1.0] * (r - 1)) @ block
    core = np.zeros((m, m))
    core[0, 0] = 1.0
    core[1:, 1:] = block
    return q @ core @ q.T


def check_rotation(o: np.ndarray, tol: float = ROTATION_TOL) -> float:
    """Max deviation from orthogonality and from fixing the ones vector."""
    m = o.shape[0]
    dev = np.abs(o.T @ o - np.eye(m)).max()
    dev = max(dev, np.abs(o.sum(axis=0) - 1).max())
    dev = max(dev, np.abs(o.sum(axis=1) - 1).max())
    return float(dev)


def rotation_set(geam: Geam, seed) -> tuple:
    """One independent random rotation per group, split off a single seed."""
    seq = np.random.SeedSequence(seed)
    children = seq.spawn(geam.n_groups)
    return tuple(random_rotation(m, np.random.default_rng(child))
                 for m, child in zip(geam.params.m, children))


@dataclass(frozen=True)
class Superoperator:
    """Dense matrix of a linear map on d x d operators."""

    matrix: np.ndarray
    d: int

    def apply(self, x: np.ndarray) -> np.ndarray:
        return (self.matrix @ vec(x)).reshape(self.d, self.d)

    def apply_extended(self, r: np.ndarray) -> np.ndarray:
        """Apply identity (x) map to an operator on C^d (x) C^d."""
        d = self.d
        blocks = r.reshape(d, d, d, d).transpose(0, 2, 1, 3).reshape(d * d, d * d)
        out = blocks @ self.matrix.T
        return out.reshape(d, d, d, d).transpose(0, 2, 1, 3).reshape(d * d, d * d)

    def hermiticity_defect(self) -> float:
        """Largest anti-Hermitian residue of the images of a Hermitian basis.

        Zero exactly when the map sends Hermitian inputs to Hermitian
        outputs, which for the matrix representation is the reshuffled
        Hermiticity of the Choi matrix.
        """
        w = choi_matrix(self)
        return float(np.abs(w - w.conj().T).max())

    def __add__(self, other):
        self._same(other)
        return Superoperator(self.matrix + other.matrix, self.d)

    def __sub__(self, other):
        self._same(other)
        return Superoperator(self.matrix - other.matrix, self.d)

    def __rmul__(self, scalar):
        return Superoperator(scalar * self.matrix, self.d)

    def _same(self, other):
        if self.d != other.d:
            raise ValidationError("superoperator dimensions differ")


def phi_zero(d: int) -> Superoperator:
    """Completely depolarizing map X -> Tr(X) I/d."""
    if d < 2:
        raise ValidationError(f"dimension must be >= 2, got {d}")
    mat = np.outer(vec(np.eye(d) / d), vec(np.eye(d))).astype(complex)
    return Superoperator(matrix=mat, d=d)


def phi_alpha(geam: Geam, alpha: int, o: np.ndarray) -> Superoperator:
    """Frame map of one group: X -> sum_{k,l} O_kl P_k Tr(X P_l).

    The rotation must be orthogonal and fix the all-ones vector; its
    row and column sums being 1 gives the trace rescaling
    Tr(map[X]) = a_alpha gamma_alpha Tr(X) and map[I] = a gamma I.
    The identity rotation yields a measure-and-prepare map.
    """
    if not 0 <= alpha < geam.n_groups:
        raise ValidationError(f"group index {alpha} out of range")
    grp = geam.ops[alpha]
    m = len(grp)
    o = np.asarray(o, dtype=float)
    if o.shape != (m, m):
        raise ValidationError(f"rotation shape {o.shape} does not match M = {m}")
    if check_rotation(o) > ROTATION_TOL:
        raise ValidationError("rotation is not orthogonal or does not fix (1,..,1)")
    d = geam.d
    outs = grp.reshape(m, -1)
    ins = grp.conj().reshape(m, -1)
    mat = np.einsum("kl,kx,ly->xy", o, outs, ins)
    return Superoperator(matrix=mat, d=d)


def a_coefficient(geam: Geam, k: int, l: int, kk: int) -> float:
    """Depolarizing weight that makes the signed frame combination k-positive.

    Closed form: -d (mu_K - 2 mu_L) + sqrt((d-1) S [(d-1) k S + d (k-1) mu_K]).
    Only the positive branch of the underlying quadratic is taken; the
    combination's trace factor A + d (mu_K - 2 mu_L) must come out
    positive, otherwise an error asks for sign reconsideration.
    """
    d = geam.d
    if not 1 <= l <= kk <= geam.n_groups:
        raise ValidationError(f"need 1 <= L <= K <= N, got L={l}, K={kk}")
    if not 1 <= k <= d:
        raise ValidationError(f"need 1 <= k <= d, got k={k}")
    eq = equidistance(geam)
    if not eq.equidistant:
        raise ValidationError("the map family requires an equidistant GEAM")
    s = eq.s
    mu_l, mu_k = geam.derived.mu(l), geam.derived.mu(kk)
    a_k = -d * (mu_k - 2 * mu_l) + np.sqrt(
        (d - 1) * s * ((d - 1) * k * s + d * (k - 1) * mu_k))
    if a_k + d * (mu_k - 2 * mu_l) <= 0:
        raise ValidationError(
            "trace factor A + d (mu_K - 2 mu_L) is not positive; the positive "
            "branch does not apply, reconsider the sign choice"
        )
    return float(a_k)


def phi_k(geam: Geam, rotations, k: int, l: int, kk: int) -> Superoperator:
    """Signed combination A Phi_0 + sum_{L<alpha<=K} Phi_alpha - sum_{alpha<=L} Phi_alpha."""
    if len(rotations) < kk:
        raise ValidationError(f"need rotations for groups 1..{kk}, got {len(rotations)}")
    a_k = a_coefficient(geam, k, l, kk)
    total = a_k * phi_zero(geam.d)
    for alpha in range(l, kk):
        total = total + phi_alpha(geam, alpha, rotations[alpha])
    for alpha in range(l):
        total = total - phi_alpha(geam, alpha, rotations[alpha])
    return total


@dataclass(frozen=True)
class Witness:
    """Choi matrix of a map plus its construction metadata."""

    w: np.ndarray
    meta: dict = field(default_factory=dict)

    @property
    def d(self) -> int:
        return int(np.sqrt(self.w.shape[0]))


def choi_matrix(phi: Superoperator) -> np.ndarray:
    """Choi matrix sum_{mn} |m><n| (x) map[|m><n|] of a superoperator."""
    d = phi.d
    s4 = phi.matrix.reshape(d, d, d, d)
    return np.ascontiguousarray(s4.transpose(2, 0, 3, 1).reshape(d * d, d * d))


def superop_from_choi(w: np.ndarray, d: int) -> Superoperator:
    """Inverse of choi_matrix."""
    w4 = np.asarray(w).reshape(d, d, d, d)
    return Superoperator(
        matrix=np.ascontiguousarray(w4.transpose(1, 3, 0, 2).reshape(d * d, d * d)),
        d=d,
    )


def choi_witness(phi: Superoperator, meta: dict | None = None) -> Witness:
    """Wrap the Choi matrix of a Hermiticity-preserving map as a witness."""
    defect = phi.hermiticity_defect()
    if defect > HERMITICITY_PRESERVING_TOL:
        raise ValidationError(
            f"map is not Hermiticity-preserving (defect {defect:.3e})"
        )
    w = choi_matrix(phi)
    w = (w + w.conj().T) / 2
    return Witness(w=w, meta=dict(meta or {}))


def frame_witness(geam: Geam, rotations, k: int, l: int, kk: int) -> np.ndarray:
    """Witness assembled directly from the frames, bypassing the superoperator.

    Computes (A/d) I (x) I + sum_{L<alpha<=K} J_alpha - sum_{alpha<=L} J_alpha
    with J_alpha = sum_{k,l} O_kl conj(P_l) (x) P_k. Used as the second,
    independent route against the Choi construction.
    """
    d = geam.d
    a_k = a_coefficient(geam, k, l, kk)
    w = a_k / d * np.eye(d * d, dtype=complex)
    for alpha in range(kk):
        grp = geam.ops[alpha]
        o = np.asarray(rotations[alpha])
        j = np.einsum("kl,lab,kcd->acbd", o, grp.conj(), grp).reshape(d * d, d * d)
        w = w - j if alpha < l else w + j
    return w


def rotation_fingerprint(rotations) -> str:
    h = hashlib.sha256()
    for o in rotations:
        h.update(np.ascontiguousarray(o, dtype=float).tobytes())
    return h.hexdigest()[:16]


def build_witness(geam: Geam, rotations, k: int, l: int, kk: int, *,
                  geam_fingerprint: str | None = None,
                  rotation_seed=None) -> Witness:
    """Construct the Schmidt-number witness for given (k, L, K) and rotations.

    Both construction routes are evaluated and must agree entrywise within
    1e-10; the returned matrix is the Choi route. Metadata records the
    closed-form depolarizing weight and fingerprints of the ingredients.
    """
    phi = phi_k(geam, rotations, k, l, kk)
    w_choi = choi_witness(phi).w
    w_frames = frame_witness(geam, rotations, k, l, kk)
    gap = np.abs(w_choi - w_frames).max()
    if gap > DUAL_ROUTE_TOL:
        raise ValidationError(
            f"witness construction routes disagree by {gap:.3e}; "
            "conjugation convention violated"
        )
    meta = {
        "k": k,
        "l": l,
        "kk": kk,
        "a_k": a_coefficient(geam, k, l, kk),
        "rotation_fingerprint": rotation_fingerprint(rotations),
    }
    if geam_fingerprint is not None:
        meta["geam_fingerprint"] = geam_fingerprint
    if rotation_seed is not None:
        meta["rotation_seed"] = rotation_seed
    return Witness(w=w_choi, meta=meta)
