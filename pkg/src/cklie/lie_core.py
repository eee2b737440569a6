"""Structure-constant core for the four generator families.

Closed-form builders fill sparse bracket tables directly from the family
rules; `from_matrices` rebuilds the same constants by commuting the matrix
generators and decomposing in the basis, which cross-validates both routes
constant by constant.  Jacobi verification, contraction (zeroing omega
entries), basis permutation and centrally extended algebras live here too.

Index conventions throughout: whenever three indices a, b, c appear they
satisfy a < b < c; four indices a < b, d < e are pairwise distinct; there is
no implied summation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .ck_matrix import (
    FAMILIES,
    B,
    E,
    GeneratorLabel,
    J,
    M,
    Mq,
    OmegaVector,
    XI_LABEL,
    build_generator,
    labels_for_family,
    mat_commutator,
    BasisDecomposer,
)

__all__ = [
    "LieAlgebra",
    "build_so",
    "build_su",
    "build_u",
    "build_sq",
    "build_algebra",
    "verify_jacobi",
    "from_matrices",
    "contract",
    "permute_basis",
    "epsilon",
    "ExtendedAlgebra",
    "build_extended",
]

_F0 = Fraction(0)
_F1 = Fraction(1)
_F2 = Fraction(2)


def epsilon(a: int, b: int, c: int) -> int:
    """Totally antisymmetric unit tensor on {1, 2, 3} with epsilon(1,2,3) = 1."""
    for v in (a, b, c):
        if v not in (1, 2, 3):
            raise ValueError(f"epsilon indices must be in 1..3, got ({a},{b},{c})")
    if a == b or b == c or a == c:
        return 0
    return 1 if (b - a) % 3 == 1 else -1


def _eps_pair(alpha: int, beta: int) -> tuple[int, int]:
    """For distinct alpha, beta return (gamma, epsilon(alpha, beta, gamma))."""
    gamma = 6 - alpha - beta
    return gamma, epsilon(alpha, beta, gamma)


class LieAlgebra:
    """Finite-dimensional real Lie algebra given by labeled basis + constants.

    Constants are stored sparsely, keyed by index pairs (i, j) with i < j;
    antisymmetry is implicit and `bracket` negates on demand for j < i.
    """

    __slots__ = ("family", "omega", "basis", "constants", "_index")

    def __init__(self, family, omega, basis, constants):
        self.family = family
        self.omega = omega
        self.basis = tuple(basis)
        self.constants = constants
        self._index = {lab: i for i, lab in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: GeneratorLabel) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"label {label} is not in the basis") from None

    def label(self, i: int) -> GeneratorLabel:
        return self.basis[i]

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """Coefficients of [X_i, X_j]; handles any index order, empty if zero."""
        if i == j:
            return {}
        if i < j:
            return self.constants.get((i, j), {})
        terms = self.constants.get((j, i))
        if not terms:
            return {}
        return {k: -c for k, c in terms.items()}

    def bracket_of(self, u: GeneratorLabel, v: GeneratorLabel) -> dict[GeneratorLabel, Fraction]:
        return {
            self.basis[k]: c for k, c in self.bracket(self.index(u), self.index(v)).items()
        }

    def structure_rows(self):
        """Yield (i, j, k, c) with i < j, sorted, over nonzero constants."""
        for (i, j) in sorted(self.constants):
            terms = self.constants[(i, j)]
            for k in sorted(terms):
                yield i, j, k, terms[k]

    def same_constants(self, other: "LieAlgebra") -> bool:
        if self.dim != other.dim:
            return False
        return self.constants == other.constants

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "dim": self.dim,
            "omega": [str(c) for c in self.omega] if self.omega is not None else None,
            "basis": [str(lab) for lab in self.basis],
            "constants": [
                {
                    "i": i,
                    "j": j,
                    "k": k,
                    "c": str(c),
                    "label_i": str(self.basis[i]),
                    "label_j": str(self.basis[j]),
                    "label_k": str(self.basis[k]),
                }
                for i, j, k, c in self.structure_rows()
            ],
        }

    def __repr__(self) -> str:
        om = self.omega.text() if self.omega is not None else "?"
        return f"LieAlgebra({self.family}, omega=({om}), dim={self.dim})"


class _Builder:
    """Collects bracket rows with order normalization and collision checks."""

    def __init__(self, labels):
        self.index = {lab: i for i, lab in enumerate(labels)}
        self.constants: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(self, u: GeneratorLabel, v: GeneratorLabel, terms: dict[GeneratorLabel, Fraction]):
        i, j = self.index[u], self.index[v]
        if i == j:
            raise ValueError(f"bracket of {u} with itself")
        sign = 1
        if i > j:
            i, j = j, i
            sign = -1
        filtered = {}
        for lab, c in terms.items():
            if c:
                filtered[self.index[lab]] = Fraction(sign) * c
        if (i, j) in self.constants:
            raise ValueError(f"bracket ({u}, {v}) assigned twice")
        if filtered:
            self.constants[(i, j)] = filtered


def build_so(omega) -> LieAlgebra:
    """Orthogonal family: [J_ab, J_ac] = w_ab J_bc, [J_ab, J_bc] = -J_ac,
    [J_ac, J_bc] = w_bc J_ab; brackets of disjoint index pairs vanish."""
    om = OmegaVector.coerce(omega)
    labels = labels_for_family("so", om.n)
    bld = _Builder(labels)
    for a, b, c in combinations(range(om.n + 1), 3):
        bld.put(J(a, b), J(a, c), {J(b, c): om.product(a, b)})
        bld.put(J(a, b), J(b, c), {J(a, c): -_F1})
        bld.put(J(a, c), J(b, c), {J(a, b): om.product(b, c)})
    return LieAlgebra("so", om, labels, bld.constants)


def _torus_coefficient(a: int, b: int, l: int) -> int:
    # delta_{a,l-1} - delta_{b,l-1} + delta_{b,l} - delta_{a,l}
    return (a == l - 1) - (b == l - 1) + (b == l) - (a == l)


def _fill_su(bld: _Builder, om: OmegaVector):
    n = om.n
    for a, b, c in combinations(range(n + 1), 3):
        w_ab = om.product(a, b)
        w_bc = om.product(b, c)
        bld.put(J(a, b), J(a, c), {J(b, c): w_ab})
        bld.put(J(a, b), J(b, c), {J(a, c): -_F1})
        bld.put(J(a, c), J(b, c), {J(a, b): w_bc})
        bld.put(M(a, b), M(a, c), {J(b, c): w_ab})
        bld.put(M(a, b), M(b, c), {J(a, c): _F1})
        bld.put(M(a, c), M(b, c), {J(a, b): w_bc})
        bld.put(J(a, b), M(a, c), {M(b, c): w_ab})
        bld.put(J(a, b), M(b, c), {M(a, c): -_F1})
        bld.put(J(a, c), M(b, c), {M(a, b): -w_bc})
        bld.put(M(a, b), J(a, c), {M(b, c): -w_ab})
        bld.put(M(a, b), J(b, c), {M(a, c): -_F1})
        bld.put(M(a, c), J(b, c), {M(a, b): w_bc})
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            for l in range(1, n + 1):
                kappa = _torus_coefficient(a, b, l)
                if kappa:
                    bld.put(J(a, b), B(l), {M(a, b): Fraction(kappa)})
                    bld.put(M(a, b), B(l), {J(a, b): Fraction(-kappa)})
            w_ab = om.product(a, b)
            if w_ab:
                bld.put(
                    J(a, b), M(a, b), {B(s): -_F2 * w_ab for s in range(a + 1, b + 1)}
                )


def build_su(omega) -> LieAlgebra:
    """Special unitary family on the basis {J, M, B}; torus rows carry the
    Kronecker coefficient (d_{a,l-1} - d_{b,l-1} + d_{b,l} - d_{a,l})."""
    om = OmegaVector.coerce(omega)
    labels = labels_for_family("su", om.n)
    bld = _Builder(labels)
    _fill_su(bld, om)
    return LieAlgebra("su", om, labels, bld.constants)


def build_u(omega) -> LieAlgebra:
    """Unitary family: the su basis plus the central phase generator I."""
    om = OmegaVector.coerce(omega)
    labels = labels_for_family("u", om.n)
    bld = _Builder(labels)
    _fill_su(bld, om)
    return LieAlgebra("u", om, labels, bld.constants)


def build_sq(omega) -> LieAlgebra:
    """Quaternionic unitary family on {J, M^alpha, E^alpha}.

    Same-unit rows mirror the J/M pattern; rows mixing distinct quaternionic
    units alpha != beta carry epsilon(alpha, beta, gamma) with gamma the
    remaining unit.
    """
    om = OmegaVector.coerce(omega)
    n = om.n
    labels = labels_for_family("sq", n)
    bld = _Builder(labels)
    pairs = [(a, b) for a in range(n + 1) for b in range(a + 1, n + 1)]
    for a, b, c in combinations(range(n + 1), 3):
        bld.put(J(a, b), J(a, c), {J(b, c): om.product(a, b)})
        bld.put(J(a, b), J(b, c), {J(a, c): -_F1})
        bld.put(J(a, c), J(b, c), {J(a, b): om.product(b, c)})
    for alpha in (1, 2, 3):
        for a, b, c in combinations(range(n + 1), 3):
            w_ab = om.product(a, b)
            w_bc = om.product(b, c)
            bld.put(Mq(alpha, a, b), Mq(alpha, a, c), {J(b, c): w_ab})
            bld.put(Mq(alpha, a, b), Mq(alpha, b, c), {J(a, c): _F1})
            bld.put(Mq(alpha, a, c), Mq(alpha, b, c), {J(a, b): w_bc})
            bld.put(J(a, b), Mq(alpha, a, c), {Mq(alpha, b, c): w_ab})
            bld.put(J(a, b), Mq(alpha, b, c), {Mq(alpha, a, c): -_F1})
            bld.put(J(a, c), Mq(alpha, b, c), {Mq(alpha, a, b): -w_bc})
            bld.put(Mq(alpha, a, b), J(a, c), {Mq(alpha, b, c): -w_ab})
            bld.put(Mq(alpha, a, b), J(b, c), {Mq(alpha, a, c): -_F1})
            bld.put(Mq(alpha, a, c), J(b, c), {Mq(alpha, a, b): w_bc})
        for a, b in pairs:
            w_ab = om.product(a, b)
            if w_ab:
                bld.put(
                    J(a, b),
                    Mq(alpha, a, b),
                    {E(alpha, b): _F2 * w_ab, E(alpha, a): -_F2 * w_ab},
                )
            bld.put(J(a, b), E(alpha, a), {Mq(alpha, a, b): _F1})
            bld.put(J(a, b), E(alpha, b), {Mq(alpha, a, b): -_F1})
            bld.put(Mq(alpha, a, b), E(alpha, a), {J(a, b): -_F1})
            bld.put(Mq(alpha, a, b), E(alpha, b), {J(a, b): _F1})
    for alpha in (1, 2, 3):
        for beta in (1, 2, 3):
            if beta == alpha:
                continue
            gamma, eps = _eps_pair(alpha, beta)
            feps = Fraction(eps)
            for a, b, c in combinations(range(n + 1), 3):
                bld.put(
                    Mq(alpha, a, b), Mq(beta, a, c), {Mq(gamma, b, c): feps * om.product(a, b)}
                )
                bld.put(Mq(alpha, a, b), Mq(beta, b, c), {Mq(gamma, a, c): feps})
                bld.put(
                    Mq(alpha, a, c), Mq(beta, b, c), {Mq(gamma, a, b): feps * om.product(b, c)}
                )
            for a, b in pairs:
                bld.put(Mq(alpha, a, b), E(beta, a), {Mq(gamma, a, b): feps})
                bld.put(Mq(alpha, a, b), E(beta, b), {Mq(gamma, a, b): feps})
    for alpha, beta in ((1, 2), (1, 3), (2, 3)):
        gamma, eps = _eps_pair(alpha, beta)
        feps = Fraction(eps)
        for a, b in pairs:
            w_ab = om.product(a, b)
            if w_ab:
                bld.put(
                    Mq(alpha, a, b),
                    Mq(beta, a, b),
                    {E(gamma, a): _F2 * feps * w_ab, E(gamma, b): _F2 * feps * w_ab},
                )
        for a in range(n + 1):
            bld.put(E(alpha, a), E(beta, a), {E(gamma, a): _F2 * feps})
    return LieAlgebra("sq", om, labels, bld.constants)


_BUILDERS = {"so": build_so, "su": build_su, "u": build_u, "sq": build_sq}


def build_algebra(family: str, omega) -> LieAlgebra:
    if family not in _BUILDERS:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return _BUILDERS[family](omega)


def verify_jacobi(algebra) -> bool:
    """Exact Jacobi check over every index triple i < j < l.

    Accepts a LieAlgebra or anything exposing `.algebra` (e.g. an
    ExtendedAlgebra).
    """
    L = getattr(algebra, "algebra", algebra)
    r = L.dim
    for i, j, l in combinations(range(r), 3):
        acc: dict[int, Fraction] = {}
        for pair, third in (((i, j), l), ((j, l), i), ((l, i), j)):
            terms = L.bracket(*pair)
            for k, c in terms.items():
                for m, c2 in L.bracket(k, third).items():
                    nv = acc.get(m, _F0) + c * c2
                    if nv:
                        acc[m] = nv
                    else:
                        acc.pop(m, None)
        if acc:
            return False
    return True


def from_matrices(family: str, omega) -> LieAlgebra:
    """Rebuild the structure constants from matrix commutators.

    Every pairwise commutator of the matrix generators is decomposed in the
    generator basis; failure to decompose means the matrix algebra did not
    close, which the construction rules out, so it is raised as a hard error.
    """
    om = OmegaVector.coerce(omega)
    labels = labels_for_family(family, om.n)
    mats = [build_generator(family, lab, om) for lab in labels]
    dec = BasisDecomposer(mats)
    constants: dict[tuple[int, int], dict[int, Fraction]] = {}
    r = len(labels)
    for i in range(r):
        for j in range(i + 1, r):
            com = mat_commutator(mats[i], mats[j])
            if com.is_zero():
                continue
            coeffs = dec.coefficients(com)
            terms = {k: c for k, c in enumerate(coeffs) if c}
            if terms:
                constants[(i, j)] = terms
    return LieAlgebra(family, om, labels, constants)


def contract(omega, zero_set: Iterable[int]) -> OmegaVector:
    """Zero the listed 1-based coefficients; builders evaluated at the result
    produce the contracted algebra."""
    return OmegaVector.coerce(omega).with_zeros(zero_set)


def permute_basis(L: LieAlgebra, perm: Iterable[int]) -> LieAlgebra:
    """Same algebra on a permuted basis: new basis[p] = old basis[perm[p]]."""
    perm = list(perm)
    r = L.dim
    if sorted(perm) != list(range(r)):
        raise ValueError("perm must be a permutation of 0..dim-1")
    inv = [0] * r
    for p, old in enumerate(perm):
        inv[old] = p
    basis = [L.basis[old] for old in perm]
    constants: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), terms in L.constants.items():
        p, q = inv[i], inv[j]
        sign = 1
        if p > q:
            p, q = q, p
            sign = -1
        constants[(p, q)] = {inv[k]: Fraction(sign) * c for k, c in terms.items()}
    return LieAlgebra(L.family, L.omega, basis, constants)


@dataclass(frozen=True)
class ExtendedAlgebra:
    """Central extension: base brackets plus xi_ij on the adjoined center.

    The central generator occupies the last index of `algebra` and carries
    no bracket rows, so it commutes with everything by construction.
    """

    base: LieAlgebra
    xi: object
    algebra: LieAlgebra

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        return self.algebra.bracket(i, j)


def build_extended(L: LieAlgebra, xi) -> ExtendedAlgebra:
    """Adjoin a central generator with extension coefficients xi.

    The result satisfies the Jacobi identity exactly when xi solves the
    cocycle equations of L.
    """
    r = L.dim
    if xi.dim != r:
        raise ValueError(f"cochain dimension {xi.dim} != algebra dimension {r}")
    basis = list(L.basis) + [XI_LABEL]
    constants = {pair: dict(terms) for pair, terms in L.constants.items()}
    for (i, j), value in xi.items():
        if value:
            constants.setdefault((i, j), {})[r] = value
    extended = LieAlgebra(L.family, L.omega, basis, constants)
    return ExtendedAlgebra(base=L, xi=xi, algebra=extended)
