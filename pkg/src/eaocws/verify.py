"""
Two independent checks of a code's error-correcting power.

``symplectic_verify`` works on effective words and commutation bits only.
``dense_oqec_check`` builds the code's basis states as full state vectors
on all ``n + c`` qubits and tests the subsystem error-correction
condition on matrix elements. The dense route is the ground truth at small
sizes.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from dataclasses import dataclass, field

import numpy as np

from .builder import EaocwsCode
from .induction import BinaryWord, effective_word, enumerate_alice_errors
from .pauli import PauliOp, commutes, multiply, pauli_to_text
from .structure import WordGaugeGroup

DEFAULT_CAP = 14
EIGEN_TOL = 1e-10
NORM_TOL = 1e-12
OQEC_TOL = 1e-9
MAX_WITNESSES = 10
CHUNK_ELEMS = 1 << 22


class DenseError(RuntimeError):
    pass


def dense_cap() -> int:
    return int(os.environ.get("EAOCWS_DENSE_CAP", DEFAULT_CAP))


@dataclass
class Certificate:
    method: str
    d: int | None
    verdict: str
    checked: int
    witnesses: list[dict] = field(default_factory=list)
    violations: int = 0
    max_residual: float | None = None
    runtime: float = 0.0
    weight: int | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self, include_runtime: bool = False) -> dict:
        """Runtime is left out by default so certificate files are reproducible."""
        out = {
            "method": self.method,
            "d": self.d,
            "weight_checked": self.weight,
            "verdict": self.verdict,
            "errors_checked": self.checked,
            "violations": self.violations,
            "witnesses": self.witnesses,
        }
        if include_runtime:
            out["runtime_s"] = round(self.runtime, 6)
        if self.max_residual is not None:
            out["max_residual"] = float(self.max_residual)
        return out


def symplectic_verify(code: EaocwsCode, d: int) -> Certificate:
    """Check every Alice error of weight <= d-1 against the selected codewords.

    An error fails if its effective word equals a codeword difference, or if
    its effective word is zero and it anticommutes with some ``Z^{c_l + c_m}``.
    """
    t0 = time.perf_counter()
    group = code.group
    words = code.selected_codewords
    diffs: dict[BinaryWord, tuple[BinaryWord, BinaryWord]] = {}
    for a, b in itertools.combinations(words, 2):
        diffs.setdefault(a ^ b, (a, b))
    weight = min(d - 1, code.n)
    errors = enumerate_alice_errors(code.layout, weight) if weight > 0 else []
    witnesses, violations = [], 0
    for e in errors:
        w = effective_word(e, group)
        if not w.is_zero:
            if w in diffs:
                violations += 1
                if len(witnesses) < MAX_WITNESSES:
                    a, b = diffs[w]
                    witnesses.append({"error": pauli_to_text(e), "effective": str(w),
                                      "codewords": [str(a), str(b)], "reason": "collision"})
            continue
        for delta, (a, b) in diffs.items():
            if (delta.alice & e.xa).bit_count() & 1:
                violations += 1
                if len(witnesses) < MAX_WITNESSES:
                    witnesses.append({"error": pauli_to_text(e), "effective": str(w),
                                      "codewords": [str(a), str(b)], "reason": "degenerate-anticommuting"})
                break
    return Certificate("symplectic", d, "fail" if violations else "pass", len(errors),
                       witnesses, violations, runtime=time.perf_counter() - t0, weight=weight)


# -- dense state vectors -----------------------------------------------------
# Qubit order: Alice 1..n then Bob 1..c; global qubit q is bit q of the index.

def _masks(op: PauliOp) -> tuple[int, int]:
    return op.xa | (op.xb << op.n), op.za | (op.zb << op.n)


def apply_pauli(op: PauliOp, psi: np.ndarray) -> np.ndarray:
    """Apply the Hermitian Pauli spelled by ``op``'s letters (Y = iXZ per qubit)."""
    x, z = _masks(op)
    idx = np.arange(psi.shape[0], dtype=np.int64)
    sign = 1 - 2 * (np.bitwise_count(idx & z) & 1).astype(np.int8)
    phase = 1j ** ((x & z).bit_count() % 4)
    out = np.empty_like(psi)
    out[idx ^ x] = (phase * sign.reshape((-1,) + (1,) * (psi.ndim - 1))) * psi
    return out


def pauli_matrix(op: PauliOp) -> np.ndarray:
    """Dense matrix in the same qubit order; for small cross-checks."""
    single = {"I": np.eye(2), "X": np.array([[0, 1], [1, 0]]),
              "Y": np.array([[0, -1j], [1j, 0]]), "Z": np.diag([1, -1])}
    letters = pauli_to_text(op).replace("|", "")
    m = np.ones((1, 1), dtype=complex)
    for ch in letters:  # qubit q is bit q, so later qubits are more significant
        m = np.kron(single[ch], m)
    return m


@dataclass
class DenseState:
    amplitudes: np.ndarray
    n: int
    c: int
    sector: tuple[int, ...]


def _product_start(width: int, seed: int = 20240917) -> np.ndarray:
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.2, 1.3, width)
    phi = rng.uniform(0, 2 * np.pi, width)
    psi = np.ones(1, dtype=complex)
    for q in range(width):
        psi = np.kron(np.array([np.cos(theta[q]), np.exp(1j * phi[q]) * np.sin(theta[q])]), psi)
    return psi


def _check_cap(width: int, cap: int | None) -> None:
    cap = dense_cap() if cap is None else cap
    if width > cap:
        raise DenseError(f"n + c = {width} exceeds the dense cap {cap} (set EAOCWS_DENSE_CAP)")


def dense_base_state(group: WordGaugeGroup, gauge_sector=None, cap: int | None = None) -> DenseState:
    """Common eigenstate of the state stabilizers (+1) and gauge Z's ((-1)^sector)."""
    lay = group.layout
    _check_cap(lay.width, cap)
    sector = tuple(gauge_sector) if gauge_sector is not None else (0,) * lay.r
    if len(sector) != lay.r:
        raise ValueError(f"gauge sector needs {lay.r} bits")
    gens = [(p, 1) for p in group.state_stabilizers]
    gens += [(g, -1 if b else 1) for g, b in zip(group.gauge_z, sector)]
    psi = _product_start(lay.width)
    for p, ev in gens:
        psi = 0.5 * (psi + ev * apply_pauli(p, psi))
        norm = np.linalg.norm(psi)
        if norm < 1e-8:
            raise DenseError(f"projector chain annihilated the state at {pauli_to_text(p)}")
        psi /= norm
    for p, ev in gens:
        res = np.linalg.norm(apply_pauli(p, psi) - ev * psi)
        if res > EIGEN_TOL:
            raise DenseError(f"eigenstate residual {res:.2e} for {pauli_to_text(p)}")
    return DenseState(psi, lay.n, lay.c, sector)


def gauge_normalize(w: PauliOp, group: WordGaugeGroup) -> PauliOp:
    """Strip a word operator's action on the gauge qubits."""
    for gx, gz in zip(group.gauge_x, group.gauge_z):
        if commutes(w, gx):
            w = multiply(w, gz)
        if commutes(w, gz):
            w = multiply(w, gx)
    return w


def code_basis(code: EaocwsCode, cap: int | None = None) -> np.ndarray:
    """Columns ``W_i G_beta |base>``, ordered (i, beta), beta little-endian over gauge qubits."""
    group = code.group
    _check_cap(code.layout.width, cap)
    base = dense_base_state(group, cap=cap).amplitudes
    r = code.r
    sectors = []
    for beta in range(1 << r):
        v = base
        for k in range(r):
            if (beta >> k) & 1:
                v = apply_pauli(group.gauge_x[k], v)
        sectors.append(v)
    cols = []
    for op in code.selected:
        w = gauge_normalize(op.alice_only, group)
        cols += [apply_pauli(w, v) for v in sectors]
    return np.stack(cols, axis=1)


def dense_oqec_check(code: EaocwsCode, errors: list[PauliOp], tol: float = OQEC_TOL,
                     mode: str = "correct", cap: int | None = None, d: int | None = None) -> Certificate:
    """Subsystem error-correction test on explicit state vectors.

    ``correct``: for all pairs (E_a, E_b) in ``errors`` plus the identity,
    <i,b|E_a^dag E_b|j,b'> must equal delta_ij B_{bb'} with B independent
    of i. ``detect``: the same for each single E against the identity.
    """
    if mode not in ("correct", "detect"):
        raise ValueError("mode must be 'correct' or 'detect'")
    t0 = time.perf_counter()
    basis = code_basis(code, cap)
    M = basis.shape[1]
    gram = basis.conj().T @ basis
    if np.max(np.abs(gram - np.eye(M))) > EIGEN_TOL:
        raise DenseError("code basis is not orthonormal")
    ident = PauliOp.identity(code.n, code.c)
    errs = [ident] + [e for e in errors if not e.is_identity]
    K, R = code.K, 1 << code.r
    dim = basis.shape[0]

    def images(block: list[PauliOp]) -> np.ndarray:
        return np.stack([apply_pauli(e, basis) for e in block])  # (a, dim, M)

    def residuals(left: np.ndarray, right: np.ndarray) -> np.ndarray:
        # left: (a, dim, M), right: (b, dim, M) -> residual per (a, b)
        a, b = left.shape[0], right.shape[0]
        L = left.transpose(0, 2, 1).reshape(a * M, dim)
        Rt = right.transpose(1, 0, 2).reshape(dim, b * M)
        G = (L.conj() @ Rt).reshape(a, M, b, M).transpose(0, 2, 1, 3)
        G = G.reshape(a, b, K, R, K, R)
        eye = np.eye(K, dtype=bool)[None, None, :, None, :, None]
        res = np.abs(np.where(eye, 0, G)).max(axis=(2, 3, 4, 5))
        diag = np.einsum("abirjs->abirs", G * eye)  # diagonal blocks, (a, b, K, R, R)
        return np.maximum(res, np.abs(diag - diag[:, :, :1]).max(axis=(2, 3, 4)))

    # keep each image stack and Gram block around CHUNK_ELEMS complex numbers
    step = max(1, CHUNK_ELEMS // (dim * M))
    pairs = []
    worst = 0.0
    if mode == "correct":
        step = max(1, min(step, math.isqrt(max(1, CHUNK_ELEMS // (M * M)))))
        blocks = [errs[i:i + step] for i in range(0, len(errs), step)]
        for ia, A in enumerate(blocks):
            left = images(A)
            for ib in range(ia, len(blocks)):
                B = blocks[ib]
                res = residuals(left, images(B) if ib != ia else left)
                worst = max(worst, float(res.max()))
                for a, b in zip(*np.nonzero(res >= tol)):
                    if ia != ib or a <= b:
                        pairs.append((A[a], B[b], res[a, b]))
        checked = len(errs)
    else:
        step = max(1, min(step, CHUNK_ELEMS // (M * M)))
        base = basis[None]
        for i in range(0, len(errs), step):
            block = errs[i:i + step]
            res = residuals(base, images(block))[0]
            worst = max(worst, float(res.max()))
            pairs += [(ident, block[b], res[b]) for b in np.flatnonzero(res >= tol)]
        checked = len(errs) - 1
    witnesses = [{"pair": [pauli_to_text(a), pauli_to_text(b)], "residual": float(x)}
                 for a, b, x in pairs[:MAX_WITNESSES]]
    weight = max((e.xa | e.za).bit_count() for e in errs)
    return Certificate(f"dense-{mode}", d, "fail" if pairs else "pass", checked, witnesses,
                       len(pairs), worst, time.perf_counter() - t0, weight)


def dense_verify(code: EaocwsCode, d: int, tol: float = OQEC_TOL, cap: int | None = None) -> Certificate:
    """Dense detection check of every Alice error with weight <= d-1."""
    weight = min(d - 1, code.n)
    errors = enumerate_alice_errors(code.layout, weight) if weight > 0 else []
    cert = dense_oqec_check(code, errors, tol, mode="detect", cap=cap, d=d)
    cert.weight = weight
    return cert


def cross_validate(code: EaocwsCode, d: int, tol: float = OQEC_TOL, cap: int | None = None) -> dict:
    """Run both routes on the detection set (weight <= d-1) and correction set (<= (d-1)//2)."""
    sym_det = symplectic_verify(code, d)
    den_det = dense_verify(code, d, tol, cap)
    t = (d - 1) // 2
    sym_cor = symplectic_verify(code, 2 * t + 1)
    errs = enumerate_alice_errors(code.layout, t) if t > 0 else []
    den_cor = dense_oqec_check(code, errs, tol, mode="correct", cap=cap, d=2 * t + 1)
    agree = sym_det.verdict == den_det.verdict and sym_cor.verdict == den_cor.verdict
    return {
        "d": d,
        "agree": agree,
        "detection": {"symplectic": sym_det.verdict, "dense": den_det.verdict, "weight": d - 1},
        "correction": {"symplectic": sym_cor.verdict, "dense": den_cor.verdict, "weight": t},
        "certificates": [sym_det, den_det, sym_cor, den_cor],
    }


def code_distance(code: EaocwsCode, max_d: int | None = None) -> int:
    """Largest d (<= max_d) for which ``symplectic_verify`` passes."""
    max_d = code.n + 1 if max_d is None else max_d
    best = 1
    for d in range(2, max_d + 1):
        if not symplectic_verify(code, d).passed:
            break
        best = d
    return best
