"""Restriction of Hecke-algebra irreducibles to the even subalgebra, and
their classification.

Restricting the f-form representation of shape λ to the even subalgebra
means taking the matrices of y_i = f_1 f_{i+1}, i = 1..n-2.  The questions
answered here are numeric-linear-algebra questions about those matrices:

  - irreducibility: the commutant {X : X Y_i = Y_i X for all i} is
    one-dimensional exactly for the irreducible restrictions;
  - equivalence: a nonzero solution of X Y_i = Y'_i X is an intertwiner,
    and restrictions of a shape and its transpose are always equivalent;
  - splitting: a self-conjugate shape has a two-dimensional commutant, and
    spectral projection of its non-scalar element cuts the restriction
    into two inequivalent invariant halves of equal dimension.

classify() assembles the complete list of irreducibles: one label per
transpose pair {λ, ^tλ}, two labels (plus/minus) per self-conjugate λ,
with the dimension count Σ dim² = n!/2 checked on the way out.  Induction
multiplicities back up to the full algebra are computed from intertwiner
counts in restrictions, and per-entry transpose-symmetry deviations of the
restricted matrices are reported with signs (only absolute values are
asserted; the off-diagonal signs depend on the square-root convention).

All rank decisions go through singular-value thresholds with an explicit
gap guard: a spectrum without a clear gap raises IndeterminateRankError
instead of guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .hecke_rep import (
    GAP_GUARD,
    RANK_THRESHOLD,
    IndeterminateRankError,
    Representation,
    build_representation,
    sup_norm,
)
from .scalars import q_to_text
from .tableaux import (
    YoungDiagram,
    enumerate_diagrams,
    enumerate_standard_tableaux,
    transpose,
)

__all__ = [
    "IndeterminateRankError",
    "RestrictedRep",
    "Intertwiner",
    "DecompositionReport",
    "restrict",
    "commutant_dimension",
    "find_intertwiner",
    "split_self_conjugate",
    "classify",
    "induction_multiplicities",
    "induction_table",
    "transpose_symmetry_report",
    "n3_spectrum_report",
]


@dataclass(frozen=True)
class RestrictedRep:
    """Even-subalgebra generator matrices Y_i = F_1 F_{i+1} of one shape."""

    source: Representation
    y_matrices: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return self.source.dim

    @property
    def n(self) -> int:
        return self.source.n


@dataclass(frozen=True)
class Intertwiner:
    """Nonzero X with X Y_i = Y'_i X for all generators, plus its residual."""

    matrix: np.ndarray
    residual: float


def restrict(rep: Representation) -> RestrictedRep:
    """Matrices of y_i = f_1 f_{i+1}; empty generator list for n = 2."""
    if rep.form != "f":
        raise ValueError("restriction needs the f-form")
    mats = rep.generator_matrices
    ys = tuple(mats[0] @ mats[i] for i in range(1, rep.n - 1))
    return RestrictedRep(rep, ys)


# ---------------------------------------------------------------------------
# rank and nullspace with a conditioning guard

def _rank_and_nullspace(stacked: np.ndarray, n_cols: int):
    """(rank, nullspace basis rows) of a stacked system, with gap guard."""
    if stacked.shape[0] == 0:
        return 0, np.eye(n_cols)
    u, svals, vh = np.linalg.svd(stacked, full_matrices=True)
    del u
    top = float(svals[0]) if svals.size else 0.0
    if top == 0.0:
        return 0, np.eye(n_cols)
    cut = RANK_THRESHOLD * top
    rank = int(np.sum(svals > cut))
    if 0 < rank < svals.size:
        dropped = float(svals[rank])
        if dropped > 0.0 and float(svals[rank - 1]) / dropped < GAP_GUARD:
            raise IndeterminateRankError(
                f"singular values {svals[rank - 1]:.3e} and {dropped:.3e} "
                f"straddle the cutoff without a {GAP_GUARD:.0e} gap")
    return rank, vh[rank:]


def _y_matrices(r) -> Sequence[np.ndarray]:
    if isinstance(r, RestrictedRep):
        return r.y_matrices
    return tuple(r)


def _commutant_rows(mats: Sequence[np.ndarray], dim: int) -> np.ndarray:
    eye = np.eye(dim)
    if not mats:
        return np.zeros((0, dim * dim))
    return np.vstack([np.kron(y, eye) - np.kron(eye, y.T) for y in mats])


def commutant_dimension(r) -> int:
    """Dimension of {X : X commutes with every generator matrix}.

    Accepts a RestrictedRep or a raw sequence of square matrices (so a
    direct sum can be tested by passing block-diagonal matrices): 1 means
    irreducible; a direct sum of two irreducibles gives 2 + (1 if they are
    equivalent).
    """
    mats = _y_matrices(r)
    if not mats:
        dim = r.dim if isinstance(r, RestrictedRep) else 1
        return dim * dim
    dim = mats[0].shape[0]
    rank, _ = _rank_and_nullspace(_commutant_rows(mats, dim), dim * dim)
    return dim * dim - rank


def _intertwiner_nullspace(y1: Sequence[np.ndarray], y2: Sequence[np.ndarray]):
    """Nullspace of the system X Y1_i = Y2_i X, X of size dim2 x dim1."""
    if len(y1) != len(y2):
        raise ValueError("generator counts differ (mixed n)")
    if not y1:
        raise ValueError("no generators to intertwine (n = 2)")
    d1, d2 = y1[0].shape[0], y2[0].shape[0]
    eye1, eye2 = np.eye(d1), np.eye(d2)
    stacked = np.vstack([np.kron(b, eye1) - np.kron(eye2, a.T)
                         for a, b in zip(y1, y2)])
    _, null = _rank_and_nullspace(stacked, d1 * d2)
    return null, d1, d2


def find_intertwiner(r1, r2, tol: float = 1e-10):
    """A nonzero intertwiner from r1 to r2, or None if none exists."""
    y1, y2 = _y_matrices(r1), _y_matrices(r2)
    null, d1, d2 = _intertwiner_nullspace(y1, y2)
    if null.shape[0] == 0:
        return None
    x = null[0].reshape(d2, d1)
    x = x / np.linalg.norm(x)
    residual = max(sup_norm(b @ x - x @ a) for a, b in zip(y1, y2))
    if residual > tol:
        raise IndeterminateRankError(
            f"intertwiner residual {residual:.3e} exceeds tolerance {tol:.1e}")
    return Intertwiner(x, residual)


# ---------------------------------------------------------------------------
# splitting self-conjugate restrictions

def _transpose_permutation(rep: Representation) -> np.ndarray:
    """Matrix of v_T -> v_{^tT} on the basis of a self-conjugate shape."""
    index = {t.entries: k for k, t in enumerate(rep.basis)}
    dim = len(rep.basis)
    s = np.zeros((dim, dim))
    for k, t in enumerate(rep.basis):
        s[index[transpose(t).entries], k] = 1.0
    return s


def _nonscalar_commutant_element(null: np.ndarray, dim: int) -> np.ndarray:
    eye = np.eye(dim)
    best, best_norm = None, -1.0
    for row in null:
        x = row.reshape(dim, dim)
        x = x - (np.trace(x) / dim) * eye
        norm = sup_norm(x)
        if norm > best_norm:
            best, best_norm = x, norm
    if best is None or best_norm < 1e-10:
        raise IndeterminateRankError("commutant has no usable non-scalar element")
    return best


def _two_clusters(values: np.ndarray):
    """Split sorted 1-d coordinates at the largest gap; indices per side."""
    order = np.argsort(values)
    sorted_vals = values[order]
    gaps = np.diff(sorted_vals)
    cut = int(np.argmax(gaps))
    gap = float(gaps[cut])
    low = order[:cut + 1]
    high = order[cut + 1:]
    return low, high, gap


def split_self_conjugate(r: RestrictedRep, tol: float = 1e-10):
    """Two invariant halves of a self-conjugate restriction.

    Returns (plus_basis, minus_basis, report): orthonormal column bases of
    the two complementary invariant subspaces, found by spectral projection
    of the non-scalar commutant element.  The literal plus/minus tableau
    combinations are evaluated as a diagnostic only; their invariance
    residual is reported without a verdict because their off-diagonal
    signs are convention-dependent.
    """
    shape = r.source.shape
    if not shape.is_self_conjugate:
        raise ValueError(f"shape {shape.text()} is not self-conjugate")
    mats = r.y_matrices
    dim = r.dim
    rank, null = _rank_and_nullspace(_commutant_rows(mats, dim), dim * dim)
    nullity = dim * dim - rank
    if nullity != 2:
        raise IndeterminateRankError(
            f"commutant dimension {nullity}, expected 2 for a "
            f"self-conjugate restriction")
    x = _nonscalar_commutant_element(null, dim)

    if all(np.isrealobj(m) for m in mats) and np.isrealobj(x):
        # the commutant is transpose-closed here, so split the non-scalar
        # element into symmetric + skew parts and take the larger one
        sym_part = (x + x.T) / 2
        sym_part = sym_part - (np.trace(sym_part) / dim) * np.eye(dim)
        skew_part = (x - x.T) / 2
        if sup_norm(sym_part) >= sup_norm(skew_part):
            herm = sym_part.astype(np.complex128)
        else:
            herm = 1j * skew_part  # Hermitian with real spectrum
        eigenvalues, vectors = np.linalg.eigh(herm)
        low, high, gap = _two_clusters(eigenvalues)
        basis_low, basis_high = vectors[:, low], vectors[:, high]
    else:
        eigenvalues, vectors = np.linalg.eig(x)
        pts = np.stack([eigenvalues.real, eigenvalues.imag])
        pts = pts - pts.mean(axis=1, keepdims=True)
        direction = np.linalg.svd(pts, full_matrices=False)[0][:, 0]
        coords = direction[0] * eigenvalues.real + direction[1] * eigenvalues.imag
        low, high, gap = _two_clusters(coords)
        basis_low = np.linalg.qr(vectors[:, low])[0]
        basis_high = np.linalg.qr(vectors[:, high])[0]

    if basis_low.shape[1] != basis_high.shape[1]:
        raise IndeterminateRankError(
            f"unequal split {basis_low.shape[1]} + {basis_high.shape[1]} "
            f"of dimension {dim}")

    def invariance_residual(basis: np.ndarray) -> float:
        projector = basis @ basis.conj().T
        comp = np.eye(dim) - projector
        return max((sup_norm(comp @ (y @ basis)) for y in mats), default=0.0)

    res_low, res_high = invariance_residual(basis_low), invariance_residual(basis_high)

    # tag by overlap with the symmetrized transpose-permutation projector
    s = _transpose_permutation(r.source)
    half_sym = (np.eye(dim) + s) / 2

    def overlap(basis: np.ndarray) -> float:
        return float(np.real(np.trace(basis.conj().T @ half_sym @ basis)))

    o_low, o_high = overlap(basis_low), overlap(basis_high)
    if o_high >= o_low:
        plus_basis, minus_basis = basis_high, basis_low
        res_plus, res_minus = res_high, res_low
        o_plus, o_minus = o_high, o_low
    else:
        plus_basis, minus_basis = basis_low, basis_high
        res_plus, res_minus = res_low, res_high
        o_plus, o_minus = o_low, o_high

    # diagnostic: the literal symmetric/antisymmetric tableau combinations
    index = {t.entries: k for k, t in enumerate(r.source.basis)}
    lit_plus, lit_minus = [], []
    for k, t in enumerate(r.source.basis):
        mate = index[transpose(t).entries]
        if k < mate:
            e = np.zeros(dim)
            e[k] = 1.0
            e_mate = np.zeros(dim)
            e_mate[mate] = 1.0
            lit_plus.append((e + e_mate) / math.sqrt(2.0))
            lit_minus.append((e - e_mate) / math.sqrt(2.0))
    lit_residual = max(invariance_residual(np.stack(cols, axis=1))
                       for cols in (lit_plus, lit_minus))

    report = {
        "shape": shape.text(),
        "dim": dim,
        "method": "commutant spectral projection",
        "commutant_dim": 2,
        "split_dims": [plus_basis.shape[1], minus_basis.shape[1]],
        "eigenvalue_gap": gap,
        "invariance_residual": max(res_plus, res_minus),
        "tag_overlaps": {"plus": o_plus, "minus": o_minus},
        "literal_basis_diagnostic": {
            "description": "invariance residual of the v_T +/- v_(transpose T) "
                           "basis; reported only, not used for the split",
            "invariance_residual": lit_residual,
        },
        "pass": max(res_plus, res_minus) < tol,
    }
    return plus_basis, minus_basis, report


# ---------------------------------------------------------------------------
# classification

@dataclass
class DecompositionReport:
    """Complete list of irreducibles of the even subalgebra at one q."""

    n: int
    q_value: object
    labels: list[dict]
    equivalences: list[list[str]]
    checks: dict
    idempotents: dict[str, np.ndarray] = field(default_factory=dict)
    label_matrices: dict[str, list[np.ndarray]] = field(default_factory=dict)

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "q": q_to_text(self.q_value),
            "labels": [dict(label) for label in self.labels],
            "equivalences": [list(pair) for pair in self.equivalences],
            "checks": dict(self.checks),
        }


def _label_key(shape_text: str, tag: str) -> str:
    return shape_text if tag == "whole" else f"{shape_text}:{tag}"


def classify(n: int, q, tol: float = 1e-10) -> DecompositionReport:
    """All irreducible representations of the even subalgebra at q.

    One label per transpose pair of shapes (anchored at the first shape in
    enumeration order), two labels per self-conjugate shape.  Verifies
    commutant dimension 1 per label, the transpose-pair equivalences, the
    pairwise inequivalence of distinct labels, and Σ dim² = n!/2.
    """
    if n < 3:
        raise ValueError("classify needs n >= 3")
    diagrams = enumerate_diagrams(n)
    restrictions: dict[str, RestrictedRep] = {}
    for shape in diagrams:
        restrictions[shape.text()] = restrict(build_representation(shape, q, "f"))
    q_value = next(iter(restrictions.values())).source.q_value

    labels: list[dict] = []
    equivalences: list[list[str]] = []
    label_matrices: dict[str, list[np.ndarray]] = {}
    all_pass = True

    seen = set()
    for shape in diagrams:
        text = shape.text()
        if text in seen:
            continue
        flipped = transpose(shape)
        if shape.is_self_conjugate:
            seen.add(text)
            r = restrictions[text]
            plus_basis, minus_basis, split_report = split_self_conjugate(r, tol)
            all_pass = all_pass and split_report["pass"]
            for tag, basis in (("plus", plus_basis), ("minus", minus_basis)):
                mats = [basis.conj().T @ y @ basis for y in r.y_matrices]
                cdim = commutant_dimension(mats) if mats else 1
                labels.append({"shape": text, "tag": tag,
                               "dim": basis.shape[1], "commutant_dim": cdim})
                label_matrices[_label_key(text, tag)] = mats
                all_pass = all_pass and cdim == 1
        else:
            seen.add(text)
            seen.add(flipped.text())
            r = restrictions[text]
            cdim = commutant_dimension(r)
            labels.append({"shape": text, "tag": "whole",
                           "dim": r.dim, "commutant_dim": cdim})
            label_matrices[_label_key(text, "whole")] = list(r.y_matrices)
            all_pass = all_pass and cdim == 1
            partner = restrictions[flipped.text()]
            witness = find_intertwiner(r, partner, tol)
            all_pass = all_pass and witness is not None
            equivalences.append([text, flipped.text()])

    # distinct labels must be pairwise inequivalent
    keys = [_label_key(label["shape"], label["tag"]) for label in labels]
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            witness = find_intertwiner(label_matrices[keys[a]],
                                       label_matrices[keys[b]], tol)
            if witness is not None:
                all_pass = False

    total = sum(label["dim"] ** 2 for label in labels)
    expected = math.factorial(n) // 2
    all_pass = all_pass and total == expected
    checks = {"sum_dim_sq": total, "pass": bool(all_pass)}

    # central idempotents as block projections in the label direct sum
    idempotents: dict[str, np.ndarray] = {}
    offset = 0
    total_dim = sum(label["dim"] for label in labels)
    for label, key in zip(labels, keys):
        z = np.zeros((total_dim, total_dim))
        z[offset:offset + label["dim"], offset:offset + label["dim"]] = \
            np.eye(label["dim"])
        idempotents[key] = z
        offset += label["dim"]

    return DecompositionReport(n=n, q_value=q_value, labels=labels,
                               equivalences=equivalences, checks=checks,
                               idempotents=idempotents,
                               label_matrices=label_matrices)


# ---------------------------------------------------------------------------
# induction multiplicities

def induction_multiplicities(label: str, n: int, q,
                             report: DecompositionReport | None = None) -> dict:
    """Multiplicity of one label inside the restriction of each V_mu.

    label is a shape text, optionally tagged ("2,2:plus").  By reciprocity
    the returned numbers are the multiplicities of each V_mu in the module
    induced from the label, so they must satisfy the index-2 dimension
    identity sum(mult * dim V_mu) = 2 * dim(label).
    """
    if report is None:
        report = classify(n, q)
    if label not in report.label_matrices:
        raise ValueError(f"unknown label {label!r}")
    w = report.label_matrices[label]
    label_dim = next(entry["dim"] for entry in report.labels
                     if _label_key(entry["shape"], entry["tag"]) == label)

    multiplicities = {}
    total = 0
    for shape in enumerate_diagrams(n):
        r = restrict(build_representation(shape, q, "f"))
        null, _, _ = _intertwiner_nullspace(w, r.y_matrices)
        mult = null.shape[0]
        multiplicities[shape.text()] = mult
        total += mult * r.dim
    induced = 2 * label_dim
    return {
        "label": label,
        "n": n,
        "q": q_to_text(report.q_value),
        "multiplicities": multiplicities,
        "induced_dimension": induced,
        "dimension_identity": {"sum": total, "expected": induced,
                               "pass": total == induced},
        "pass": total == induced,
    }


def induction_table(n: int, q) -> dict:
    """Induction multiplicities for every label of classify(n, q)."""
    report = classify(n, q)
    rows = []
    for entry in report.labels:
        key = _label_key(entry["shape"], entry["tag"])
        rows.append(induction_multiplicities(key, n, q, report))
    return {
        "n": n,
        "q": q_to_text(report.q_value),
        "rows": rows,
        "pass": all(row["pass"] for row in rows),
    }


# ---------------------------------------------------------------------------
# transpose symmetry of restricted matrix entries

def transpose_symmetry_report(shape: YoungDiagram, q,
                              tol: float = 1e-10) -> dict:
    """Entrywise comparison of Y-matrices for a shape and its transpose.

    Compares the matrix coefficient at (T, T') with the one at
    (^tT, ^tT') in the transposed shape's restriction.  Absolute values
    must agree within tol; signed deviations are reported without a
    verdict, because the off-diagonal sign depends on the square-root
    convention fixed by the anchoring rule.
    """
    r1 = restrict(build_representation(shape, q, "f"))
    r2 = restrict(build_representation(transpose(shape), q, "f"))
    basis2_index = {t.entries: k for k, t in enumerate(r2.source.basis)}
    mapping = [basis2_index[transpose(t).entries] for t in r1.source.basis]
    perm = np.array(mapping)

    generators = []
    all_pass = True
    for i, (y1, y2) in enumerate(zip(r1.y_matrices, r2.y_matrices), start=1):
        remapped = y2[np.ix_(perm, perm)]
        signed = remapped - y1
        absolute = np.abs(remapped) - np.abs(y1)
        entry = {
            "generator": f"y{i}",
            "max_signed_deviation": sup_norm(signed),
            "max_abs_deviation": sup_norm(absolute),
            "signed_deviations": [[float(np.real(v)) for v in row]
                                  for row in signed]
            if np.isrealobj(signed)
            else [[{"re": float(v.real), "im": float(v.imag)} for v in row]
                  for row in signed],
            "pass": sup_norm(absolute) < tol,
        }
        all_pass = all_pass and entry["pass"]
        generators.append(entry)
    return {
        "shape": shape.text(),
        "transpose": transpose(shape).text(),
        "n": shape.n,
        "q": q_to_text(r1.source.q_value),
        "tol": tol,
        "generators": generators,
        "note": "absolute deviations are asserted; signed deviations are "
                "reported without a verdict",
        "pass": bool(all_pass),
    }


# ---------------------------------------------------------------------------
# the smallest nontrivial spectrum

def n3_spectrum_report(q, tol: float = 1e-10) -> dict:
    """Spectrum of y_1 on the 2-dimensional restriction at n = 3.

    The eigenvalues are the two roots of z^2 + (1 + c^2) z + 1 with
    c = (q-1)/(q+1); for real q > 0 they are a unimodular complex-conjugate
    pair.  A real-valued expression obtained if the square root is taken
    before forming the product is evaluated alongside for comparison, but
    not asserted.
    """
    shape = YoungDiagram((2, 1))
    r = restrict(build_representation(shape, q, "f"))
    y = r.y_matrices[0]
    eigenvalues = np.linalg.eigvals(y)
    qv = r.source.q_value
    qn = complex(qv)
    c = (qn - 1) / (qn + 1)
    c2 = c * c
    roots = np.roots([1.0, 1.0 + c2, 1.0])

    # match computed eigenvalues to predicted roots, best assignment of two
    direct = max(abs(eigenvalues[0] - roots[0]), abs(eigenvalues[1] - roots[1]))
    swapped = max(abs(eigenvalues[0] - roots[1]), abs(eigenvalues[1] - roots[0]))
    root_deviation = float(min(direct, swapped))
    unimodularity = float(max(abs(abs(z) - 1.0) for z in eigenvalues))

    s = np.emath.sqrt(qn * (1 + qn + qn * qn))
    real_branch = [complex((1 + qn * qn - 2 * s) / (1 + qn) ** 2),
                   complex((1 + qn * qn + 2 * s) / (1 + qn) ** 2)]

    real_positive = not isinstance(qv, complex) and qv > 0
    passed = root_deviation < tol and (not real_positive or unimodularity < 1e-8)
    return {
        "n": 3,
        "shape": shape.text(),
        "q": q_to_text(qv),
        "eigenvalues": [{"re": float(z.real), "im": float(z.imag)}
                        for z in eigenvalues],
        "predicted_roots": [{"re": float(z.real), "im": float(z.imag)}
                            for z in roots],
        "max_root_deviation": root_deviation,
        "unimodularity_deviation": unimodularity,
        "real_branch_values": [{"re": float(z.real), "im": float(z.imag)}
                               for z in real_branch],
        "real_branch_note": "values of the expression with the square root "
                            "taken before forming the product; shown for "
                            "comparison, not asserted",
        "pass": bool(passed),
    }
