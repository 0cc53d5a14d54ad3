"""Boundary matrices and combinatorial Laplacian spectra.

Chain degrees are topological dimensions (cardinality minus one), with the
empty face in degree -1; the chain complex is reduced, so the degree-0
boundary map is the all-ones row onto the empty face.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import OrderedComplex, lex_key


@dataclass(frozen=True)
class SpectrumReport:
    dimension: int
    eigenvalues: tuple
    integral: bool
    max_deviation: float

    def to_json(self):
        return {
            "dimension": self.dimension,
            "eigenvalues": [round(float(x), 9) for x in self.eigenvalues],
            "integral": self.integral,
            "max_deviation": float(self.max_deviation),
        }


def _faces_of_dimension(c, k):
    """Faces of topological dimension k, sorted; k = -1 gives the empty face."""
    return sorted((f for f in c.faces if len(f) == k + 1), key=lex_key)


def boundary_matrix(c: OrderedComplex, k):
    """Signed incidence matrix of ∂_k: C_k -> C_{k-1}, orientation from the
    sorted vertex order.  Valid for 0 <= k <= rank - 1."""
    if not 0 <= k <= c.rank - 1:
        raise ValueError(f"dimension {k} out of range 0..{c.rank - 1}")
    rows = _faces_of_dimension(c, k - 1)
    cols = _faces_of_dimension(c, k)
    row_index = {f: i for i, f in enumerate(rows)}
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, face in enumerate(cols):
        elems = sorted(face)
        for pos, v in enumerate(elems):
            sub = frozenset(face - {v})
            out[row_index[sub], j] = (-1) ** pos
    return out


def laplacian_matrix(c: OrderedComplex, k):
    """D_k = ∂_{k+1} ∂_{k+1}ᵀ + ∂_kᵀ ∂_k on the k-dimensional chain space."""
    faces_k = _faces_of_dimension(c, k)
    size = len(faces_k)
    acc = np.zeros((size, size), dtype=np.int64)
    if 0 <= k <= c.rank - 1:
        down = boundary_matrix(c, k)
        acc = acc + down.T @ down
    if 0 <= k + 1 <= c.rank - 1:
        up = boundary_matrix(c, k + 1)
        acc = acc + up @ up.T
    return acc


def laplacian_spectrum(c: OrderedComplex, k, tol=1e-8) -> SpectrumReport:
    matrix = laplacian_matrix(c, k)
    if matrix.size == 0:
        return SpectrumReport(k, (), True, 0.0)
    eigenvalues = np.linalg.eigvalsh(matrix.astype(float))
    deviation = float(np.max(np.abs(eigenvalues - np.round(eigenvalues))))
    integral = deviation <= tol
    if not integral and c.n <= 10:
        integral = _integral_by_charpoly(matrix)
        if integral:
            deviation = 0.0
    return SpectrumReport(k, tuple(float(x) for x in sorted(eigenvalues)), integral, deviation)


def _integral_by_charpoly(matrix) -> bool:
    """Exact check: all eigenvalues integral iff the integer characteristic
    polynomial splits over the integers."""
    import sympy

    m = sympy.Matrix(matrix.tolist())
    x = sympy.symbols("x")
    poly = sympy.Poly(m.charpoly(x), x)
    factors = sympy.factor_list(poly.as_expr())[1]
    return all(sympy.degree(f, x) <= 1 for f, _ in factors)


def integrality_survey(c: OrderedComplex, tol=1e-8):
    """Spectrum reports for every chain dimension 0..rank-1."""
    return [laplacian_spectrum(c, k, tol) for k in range(max(c.rank, 1))]


def euler_characteristic(c: OrderedComplex):
    """Alternating face count Σ (-1)^dim over the nonempty faces."""
    return sum((-1) ** (len(f) - 1) for f in c.faces if f)


def is_integral(c: OrderedComplex, tol=1e-8) -> bool:
    return all(r.integral for r in integrality_survey(c, tol))
