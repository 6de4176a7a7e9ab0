"""Turn a certified signature matrix into frame vectors, and check them.

The Gram matrix of the Parseval frame is P = (k/n) I + c_{n,k} Q; it is a
rank-k projection, so factoring P = V V* through its unit eigenvalues gives
an isometry V whose rows carry the frame vectors.  Verification checks
tightness, uniform norms k/n, and the common angle c_{n,k} in floating
point against a configurable tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrices import SeidelMatrix, TwoEigenvalueCertificate, certify_two_eigenvalue
from .params import FrameParams
from .verdicts import Rejection

__all__ = [
    "FrameVectors",
    "FrameCheckReport",
    "gram_from_certificate",
    "factor_gram",
    "verify_frame",
    "frame_from_matrix",
]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class FrameVectors:
    """n frame vectors for C^k; row i of `vectors` is the analysis row
    <., f_i>, so V*V = I_k and the Gram matrix is V V*."""

    n: int
    k: int
    vectors: np.ndarray  # (n, k) complex


@dataclass(frozen=True)
class FrameCheckReport:
    tightness_dev: float       # max |V*V - I|
    uniformity_dev: float      # max | ||f_i||^2 - k/n |
    equiangularity_dev: float  # max | |<f_i,f_j>| - c |, i != j
    tol: float

    @property
    def tight(self) -> bool:
        return self.tightness_dev <= self.tol

    @property
    def uniform(self) -> bool:
        return self.uniformity_dev <= self.tol

    @property
    def equiangular(self) -> bool:
        return self.equiangularity_dev <= self.tol

    @property
    def ok(self) -> bool:
        return self.tight and self.uniform and self.equiangular

    def as_dict(self) -> dict:
        return {
            "tightness_dev": self.tightness_dev,
            "uniformity_dev": self.uniformity_dev,
            "equiangularity_dev": self.equiangularity_dev,
            "tol": self.tol,
            "tight": self.tight,
            "uniform": self.uniform,
            "equiangular": self.equiangular,
            "ok": self.ok,
        }


def gram_from_certificate(q: SeidelMatrix, params: FrameParams) -> np.ndarray:
    """P = (k/n) I + c_{n,k} Q as a complex floating-point matrix."""
    if q.n != params.n:
        raise ValueError("certificate parameters do not match the matrix size")
    cert = certify_two_eigenvalue(q)
    if not isinstance(cert, TwoEigenvalueCertificate) or cert.params != params:
        raise ValueError("matrix does not certify the supplied parameters")
    n, k = params.n, params.k
    return (k / n) * np.eye(n, dtype=np.complex128) + params.c_value * q.to_complex()


def factor_gram(p: np.ndarray, k: int, tol: float = DEFAULT_TOL) -> FrameVectors | Rejection:
    """Factor a rank-k projection P as V V* with V an n x k isometry.

    Rejects unless the spectrum sits within tol of {0, 1} with exactly k
    ones.  Eigenvectors are normalised so their first significant component
    is real and positive, making the output reproducible.
    """
    p = np.asarray(p, dtype=np.complex128)
    n = p.shape[0]
    if p.shape != (n, n):
        raise ValueError("Gram matrix must be square")
    if np.abs(p - p.conj().T).max(initial=0.0) > tol:
        return Rejection("not-hermitian", "Gram matrix is not self-adjoint within tol")
    eigvals, eigvecs = np.linalg.eigh(p)
    near_one = np.abs(eigvals - 1.0) <= tol
    near_zero = np.abs(eigvals) <= tol
    if not np.all(near_one | near_zero) or int(near_one.sum()) != k:
        spectrum = ", ".join(format(v, ".6g") for v in eigvals)
        return Rejection(
            "not-a-rank-k-projection",
            f"need {k} eigenvalues near 1 and the rest near 0; spectrum: [{spectrum}]",
        )
    cols = []
    for idx in np.nonzero(near_one)[0]:
        vec = eigvecs[:, idx] * np.sqrt(eigvals[idx])
        lead = np.nonzero(np.abs(vec) > 1e-8)[0]
        if lead.size:
            pivot = vec[lead[0]]
            vec = vec * (pivot.conjugate() / abs(pivot))
        cols.append(vec)
    v = np.column_stack(cols)
    if np.abs(v @ v.conj().T - p).max() > 10 * tol:
        return Rejection("factorisation-drift", "V V* strays from P beyond 10*tol")
    return FrameVectors(n=n, k=k, vectors=v)


def verify_frame(
    frame: FrameVectors, params: FrameParams, tol: float = DEFAULT_TOL
) -> FrameCheckReport:
    """Check tightness, uniformity and equiangularity of the frame vectors."""
    v = frame.vectors
    n, k = params.n, params.k
    if v.shape != (n, k):
        raise ValueError("frame shape does not match the parameters")
    gram = v @ v.conj().T
    tightness = float(np.abs(v.conj().T @ v - np.eye(k)).max())
    norms = np.real(np.diagonal(gram))
    uniformity = float(np.abs(norms - k / n).max())
    off = ~np.eye(n, dtype=bool)
    equiangularity = float(np.abs(np.abs(gram[off]) - params.c_value).max())
    return FrameCheckReport(
        tightness_dev=tightness,
        uniformity_dev=uniformity,
        equiangularity_dev=equiangularity,
        tol=tol,
    )


def frame_from_matrix(
    q: SeidelMatrix, tol: float = DEFAULT_TOL
) -> tuple[FrameVectors, FrameCheckReport, FrameParams] | Rejection:
    """Certify, build the Gram matrix, factor it, and verify, in one step."""
    cert = certify_two_eigenvalue(q)
    if isinstance(cert, Rejection):
        return cert
    gram = gram_from_certificate(q, cert.params)
    frame = factor_gram(gram, cert.params.k, tol=tol)
    if isinstance(frame, Rejection):
        return frame
    return frame, verify_frame(frame, cert.params, tol=tol), cert.params
