"""The algebraic T_N criterion for ordered tuples of 2x2 matrices.

An ordered tuple (X_1, ..., X_N) with pairwise det(X_i - X_j) != 0 is a T_N
configuration exactly when the matrix A^mu (A_ij = det(X_i - X_j), lower
triangle multiplied by mu) has a null vector with all-positive entries for
some mu > 1.  This module locates such roots exactly, certifies the null
vector signs, recovers the cyclic parameterization (P, C_i, kappa_i), and
re-verifies every defining property of the configuration in certified
arithmetic before emitting a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebraic import AlgScalar
from .exact import (
    RatPoly, RootInterval, cauchy_root_bound, sign_at_root, sturm_isolate,
)
from .mat2 import Mat2, det2


class RankOnePairError(ValueError):
    """Two tuple members are rank-one connected; the criterion does not apply."""

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"matrices {i + 1} and {j + 1} are rank-one connected "
                         "(det of difference vanishes)")


@dataclass(frozen=True)
class PairDetMatrix:
    """Symmetric zero-diagonal matrix of pairwise determinants."""

    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for i in range(self.n):
            if self.entries[i][i] != 0:
                raise ValueError("diagonal of a pair-determinant matrix must vanish")
            for j in range(self.n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("pair-determinant matrix must be symmetric")

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries[ij[0]][ij[1]]


def pair_det_matrix(mats: Sequence[Mat2]) -> PairDetMatrix:
    n = len(mats)
    rows = []
    for i in range(n):
        rows.append(tuple(
            det2(mats[i] - mats[j]) if i != j else Fraction(0) for j in range(n)))
    return PairDetMatrix(n, tuple(rows))


def _mu_matrix(a: PairDetMatrix) -> list[list[RatPoly]]:
    """A^mu as a polynomial matrix: upper triangle constant, lower times mu."""
    n = a.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(RatPoly())
            elif i < j:
                row.append(RatPoly.constant(a[i, j]))
            else:
                row.append(RatPoly([0, a[i, j]]))
        out.append(row)
    return out


def _polymat_det(m: list[list[RatPoly]], rows: tuple[int, ...],
                 cols: tuple[int, ...], _memo: dict | None = None) -> RatPoly:
    """Determinant of a square polynomial submatrix by first-row expansion
    with memoization over column subsets."""
    if _memo is None:
        _memo = {}
    key = (rows, cols)
    if key in _memo:
        return _memo[key]
    if len(rows) == 1:
        res = m[rows[0]][cols[0]]
    else:
        res = RatPoly()
        r0 = rows[0]
        for pos, c in enumerate(cols):
            entry = m[r0][c]
            if entry.is_zero():
                continue
            sub = _polymat_det(m, rows[1:], cols[:pos] + cols[pos + 1:], _memo)
            term = entry * sub
            res = res + term if pos % 2 == 0 else res - term
    _memo[key] = res
    return res


def mu_polynomial(a: PairDetMatrix) -> RatPoly:
    """det(A^mu) expanded as an exact polynomial in mu."""
    m = _mu_matrix(a)
    idx = tuple(range(a.n))
    return _polymat_det(m, idx, idx)


@dataclass
class RootDiagnosis:
    """Why a root mu > 1 did not produce a witness."""

    mu_approx: float
    reason: str
    degenerate: bool  # True when the candidate itself must be treated as suspect


@dataclass
class TNWitness:
    """A self-contained certificate that ``mats`` (in the stored order) is a
    T_N configuration.

    lam entries are adjugate-row polynomials in mu; their positivity at the
    root is certified, as are all recovered quantities.  ``verify`` re-derives
    every invariant from (mats, mu, lam) alone.
    """

    ordering: tuple[int, ...]
    mats: tuple[Mat2, ...]                 # the ordered tuple the witness certifies
    mu: RootInterval
    lam: tuple[RatPoly, ...]
    P: Mat2                                 # base point of the rank-one polygon
    P_points: tuple[Mat2, ...]
    C: tuple[Mat2, ...]                     # polygon edges, rank one, summing to zero
    kappa: tuple                            # scalars > 1

    def mu_approx(self) -> float:
        return self.mu.approx()

    def lam_normalized(self) -> list[float]:
        vals = [_scalar_approx(AlgScalar(self.mu, q)) for q in self.lam]
        return [v / vals[0] for v in vals]

    def kappa_approx(self) -> list[float]:
        return [_scalar_approx(k) for k in self.kappa]

    def direction_for_slot(self, pos: int) -> Mat2:
        """Rank-one direction from the matrix in tuple slot ``pos`` to its
        polygon point: P_points[pos] - mats[pos]."""
        return self.P_points[pos] - self.mats[pos]

    def verify(self) -> bool:
        """Recheck the full invariant set from stored fields."""
        try:
            _verify_witness(self)
            return True
        except WitnessInvalid:
            return False


class WitnessInvalid(Exception):
    pass


@dataclass
class CriterionResult:
    witnesses: list[TNWitness] = field(default_factory=list)
    rejected: list[RootDiagnosis] = field(default_factory=list)

    def degenerate_reasons(self) -> list[str]:
        return [d.reason for d in self.rejected if d.degenerate]

    def __iter__(self):
        return iter(self.witnesses)

    def __len__(self) -> int:
        return len(self.witnesses)


def _scalar_approx(x) -> float:
    return x.approx() if hasattr(x, "approx") else float(x)


def _as_scalar(root: RootInterval, q: RatPoly):
    """Polynomial-at-root as a scalar: plain Fraction when the root is exact."""
    if root.is_exact():
        return q(root.lo)
    return AlgScalar(root, q)


def solve_criterion(mats: Sequence[Mat2],
                    ordering: tuple[int, ...] | None = None) -> CriterionResult:
    """All T_N witnesses of the given ordered tuple.

    ``ordering`` is bookkeeping only (recorded on witnesses); the tuple is
    certified exactly as passed.
    """
    mats = tuple(mats)
    n = len(mats)
    ordering = ordering if ordering is not None else tuple(range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if det2(mats[i] - mats[j]) == 0:
                raise RankOnePairError(ordering[i], ordering[j])

    result = CriterionResult()
    a = pair_det_matrix(mats)
    p = mu_polynomial(a)
    if p.is_zero():
        result.rejected.append(RootDiagnosis(
            float("nan"), "det(A^mu) vanishes identically", True))
        return result
    if p.degree == 0:
        return result

    window_hi = cauchy_root_bound(p) + 1
    multiple_part = p.gcd(p.deriv())
    for root in sturm_isolate(p, (Fraction(1), window_hi)):
        if multiple_part.degree >= 1 and sign_at_root(multiple_part, root) == 0:
            result.rejected.append(RootDiagnosis(
                root.approx(), "multiple root of det(A^mu); null vector not attempted",
                True))
            continue
        _attempt_witness(mats, ordering, a, root, result)
    return result


def _attempt_witness(mats: tuple[Mat2, ...], ordering: tuple[int, ...],
                     a: PairDetMatrix, root: RootInterval,
                     result: CriterionResult) -> None:
    n = a.n
    m = _mu_matrix(a)
    idx = tuple(range(n))
    memo: dict = {}

    lam_polys = None
    saw_nonzero_row = False
    for k in range(n):
        # column k of adj(A^mu) is a right null vector at the root; its j-th
        # component is the signed minor deleting row k and column j
        v = []
        for j in range(n):
            rows = idx[:k] + idx[k + 1:]
            cols = idx[:j] + idx[j + 1:]
            minor = _polymat_det(m, rows, cols, memo)
            v.append(minor if (j + k) % 2 == 0 else -minor)
        signs = [sign_at_root(q, root) for q in v]
        if all(s == 0 for s in signs):
            continue
        saw_nonzero_row = True
        if any(s == 0 for s in signs):
            result.rejected.append(RootDiagnosis(
                root.approx(), "null vector has a zero component; no positive "
                "null vector at this root", True))
            return
        if len(set(signs)) != 1:
            result.rejected.append(RootDiagnosis(
                root.approx(), "null vector has mixed signs; root is not a "
                "T_N witness", False))
            return
        lam_polys = tuple(q if signs[0] > 0 else -q for q in v)
        break
    if not saw_nonzero_row:
        result.rejected.append(RootDiagnosis(
            root.approx(), "null space dimension > 1 at root", True))
        return
    assert lam_polys is not None

    try:
        witness = _recover(mats, ordering, root, lam_polys)
        _verify_witness(witness)
    except WitnessInvalid as exc:
        result.rejected.append(RootDiagnosis(root.approx(), str(exc), True))
        return
    result.witnesses.append(witness)


def _recover(mats: tuple[Mat2, ...], ordering: tuple[int, ...],
             root: RootInterval, lam_polys: tuple[RatPoly, ...]) -> TNWitness:
    """Recover (P, C_i, kappa_i) from (mu, lambda) by the weighted-average
    formulas, with P_{i+1} - P_i as the polygon edges."""
    n = len(mats)
    mu_s = _as_scalar(root, RatPoly.x())
    lam = [_as_scalar(root, q) for q in lam_polys]

    p_points = []
    for i in range(n):
        weights = [lam[j] * mu_s if j < i else lam[j] for j in range(n)]
        total = weights[0]
        for w in weights[1:]:
            total = total + w
        acc = mats[0].scale(weights[0])
        for j in range(1, n):
            acc = acc + mats[j].scale(weights[j])
        p_points.append(acc.scale(1 / total))

    edges = [p_points[(i + 1) % n] - p_points[i] for i in range(n)]

    kappas = []
    for i in range(n):
        entry = _pick_nonzero_entry(edges[i])
        if entry is None:
            raise WitnessInvalid(f"polygon edge {i + 1} vanishes; "
                                 "parameterization degenerate")
        diff = mats[i] - p_points[i]
        kappas.append(getattr(diff, entry) / getattr(edges[i], entry))

    return TNWitness(ordering=ordering, mats=mats, mu=root, lam=lam_polys,
                     P=p_points[0], P_points=tuple(p_points), C=tuple(edges),
                     kappa=tuple(kappas))


_ENTRY_NAMES = ("e11", "e12", "e21", "e22")


def _pick_nonzero_entry(m: Mat2) -> str | None:
    # try entries in decreasing float magnitude so the certified check usually
    # succeeds on the first attempt
    approx = [(abs(_scalar_approx(getattr(m, name))), name) for name in _ENTRY_NAMES]
    for _, name in sorted(approx, reverse=True):
        if not _scalar_is_zero(getattr(m, name)):
            return name
    return None


def _scalar_is_zero(x) -> bool:
    return x.is_zero() if hasattr(x, "is_zero") else x == 0


def _scalar_sign(x) -> int:
    if hasattr(x, "sign"):
        return x.sign()
    return 1 if x > 0 else (-1 if x < 0 else 0)


def _verify_witness(w: TNWitness) -> None:
    """Certified re-check of every witness invariant; raises WitnessInvalid."""
    n = len(w.mats)
    if sign_at_root(RatPoly([-1, 1]), w.mu) <= 0:
        raise WitnessInvalid("mu <= 1")
    # A^mu lam = 0 and lam > 0, from the stored polynomials alone
    a = pair_det_matrix(w.mats)
    for q in w.lam:
        if sign_at_root(q, w.mu) <= 0:
            raise WitnessInvalid("lambda component not certified positive")
    for i in range(n):
        row = RatPoly()
        for j in range(n):
            if i == j:
                continue
            coeff = RatPoly.constant(a[i, j])
            if i > j:
                coeff = coeff * RatPoly([0, 1])
            row = row + coeff * w.lam[j]
        if sign_at_root(row, w.mu) != 0:
            raise WitnessInvalid("A^mu lambda != 0 at the root")
    # polygon closes: sum of edges is zero
    total = w.C[0]
    for e in w.C[1:]:
        total = total + e
    if not all(_scalar_is_zero(x) for x in total.entries()):
        raise WitnessInvalid("polygon edges do not sum to zero")
    for i in range(n):
        # rank-one edges
        if not _scalar_is_zero(det2(w.C[i])):
            raise WitnessInvalid(f"edge {i + 1} is not rank one")
        if all(_scalar_is_zero(x) for x in w.C[i].entries()):
            raise WitnessInvalid(f"edge {i + 1} vanishes")
        # kappa > 1
        if _scalar_sign(w.kappa[i] - 1) <= 0:
            raise WitnessInvalid(f"kappa_{i + 1} <= 1")
        # exact reconstruction of the tuple member from the parameterization
        recon = w.P_points[i] + w.C[i].scale(w.kappa[i]) - w.mats[i]
        if not all(_scalar_is_zero(x) for x in recon.entries()):
            raise WitnessInvalid(f"tuple member {i + 1} is not reproduced by "
                                 "the recovered parameterization")
        # P_points chain: P_{i} = P + C_1 + ... + C_{i-1}
        if i > 0:
            chain = w.P_points[i - 1] + w.C[i - 1] - w.P_points[i]
            if not all(_scalar_is_zero(x) for x in chain.entries()):
                raise WitnessInvalid("polygon points do not chain along edges")


def check_hull_points(w: TNWitness) -> bool:
    """Testable surrogate for hull membership of the polygon points:
    every P_point connects to its tuple member along a rank-one segment and
    the parameterization scales kappa > 1."""
    n = len(w.mats)
    for i in range(n):
        d = w.P_points[i] - w.mats[i]
        if all(_scalar_is_zero(x) for x in d.entries()):
            return False
        if not _scalar_is_zero(det2(d)):
            return False
        if _scalar_sign(w.kappa[i] - 1) <= 0:
            return False
    return True


__all__ = [
    "PairDetMatrix", "pair_det_matrix", "mu_polynomial",
    "TNWitness", "CriterionResult", "RootDiagnosis", "RankOnePairError",
    "solve_criterion", "check_hull_points", "WitnessInvalid",
]
