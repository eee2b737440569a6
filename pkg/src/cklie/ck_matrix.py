"""Contraction coefficients, the diagonal metric, and matrix generators.

Each family of algebras is parametrized by N rational contraction
coefficients omega = (omega_1, ..., omega_N).  Two-index products of
consecutive coefficients build the diagonal metric, and the generators are
the metric-antihermitian elementary combinations over the matching scalar
kind (real, complex or quaternionic).

Matrices are stored densely; at desk scale (N+1 <= ~8) sparsity buys
nothing here, and the generator matrices have at most a couple of nonzero
entries anyway, which the multiplication loop skips cheaply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import Hypercomplex, Kind, parse_rational

__all__ = [
    "FAMILIES",
    "FAMILY_KIND",
    "OmegaVector",
    "omega_product",
    "canonical_signs",
    "MetricMatrix",
    "build_metric",
    "GeneratorLabel",
    "J",
    "M",
    "B",
    "Mq",
    "E",
    "I_LABEL",
    "XI_LABEL",
    "labels_for_family",
    "family_dimension",
    "MatrixOverK",
    "build_generator",
    "is_metric_antihermitian",
    "is_traceless",
    "mat_commutator",
    "decompose_in_basis",
    "BasisDecomposer",
    "NotInSpanError",
]

_F0 = Fraction(0)
_F1 = Fraction(1)

FAMILIES = ("so", "su", "u", "sq")

FAMILY_KIND = {
    "so": Kind.REAL,
    "su": Kind.COMPLEX,
    "u": Kind.COMPLEX,
    "sq": Kind.QUATERNION,
}


class OmegaVector:
    """The N contraction coefficients omega_1..omega_N (1-based accessors).

    Entries are arbitrary rationals.  Every nonzero entry could be rescaled
    to +-1 without changing the algebra up to isomorphism; that reduction is
    exposed through :meth:`signs` but never forced, so rescaling covariance
    stays testable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        vals = tuple(
            c if type(c) is Fraction else (parse_rational(c) if isinstance(c, str) else Fraction(c))
            for c in coeffs
        )
        if not vals:
            raise ValueError("omega must have at least one coefficient")
        object.__setattr__(self, "coeffs", vals)

    def __setattr__(self, name, value):
        raise AttributeError("OmegaVector is immutable")

    @classmethod
    def coerce(cls, value) -> "OmegaVector":
        if isinstance(value, OmegaVector):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(value)

    @classmethod
    def parse(cls, text: str) -> "OmegaVector":
        """Parse a comma-separated list of rationals, e.g. "1,0,-1/2"."""
        items = [part.strip() for part in text.split(",")]
        return cls(parse_rational(item) for item in items)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def value(self, k: int) -> Fraction:
        """omega_k for 1 <= k <= N."""
        if not 1 <= k <= self.n:
            raise ValueError(f"omega index {k} out of range 1..{self.n}")
        return self.coeffs[k - 1]

    def product(self, a: int, b: int) -> Fraction:
        """Two-index coefficient: product omega_{a+1} * ... * omega_b, 1 when a == b."""
        if not 0 <= a <= b <= self.n:
            raise ValueError(f"need 0 <= a <= b <= {self.n}, got a={a}, b={b}")
        return math.prod(self.coeffs[a:b], start=_F1)

    def signs(self) -> tuple[int, ...]:
        return tuple((c > 0) - (c < 0) for c in self.coeffs)

    def zero_set(self) -> frozenset[int]:
        """1-based indices of vanishing coefficients."""
        return frozenset(k for k in range(1, self.n + 1) if not self.coeffs[k - 1])

    @property
    def n_zeros(self) -> int:
        return sum(1 for c in self.coeffs if not c)

    def with_zeros(self, indices: Iterable[int]) -> "OmegaVector":
        """Copy with the listed 1-based entries set to zero."""
        idx = set(indices)
        for k in idx:
            if not 1 <= k <= self.n:
                raise ValueError(f"omega index {k} out of range 1..{self.n}")
        return OmegaVector(
            _F0 if (k + 1) in idx else c for k, c in enumerate(self.coeffs)
        )

    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, OmegaVector):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"OmegaVector(({self.text()}))"

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"


def omega_product(omega, a: int, b: int) -> Fraction:
    """Two-index product of contraction coefficients (module-level form)."""
    return OmegaVector.coerce(omega).product(a, b)


def canonical_signs(omega) -> tuple[int, ...]:
    """Reduce each coefficient to its sign in {-1, 0, +1}."""
    return OmegaVector.coerce(omega).signs()


@dataclass(frozen=True)
class MetricMatrix:
    """Diagonal of the hermitian metric: (1, w_01, w_02, ..., w_0N)."""

    diag: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.diag)

    def signature(self) -> tuple[int, int]:
        """(#positive, #negative) diagonal entries; undefined with zeros present."""
        if any(not d for d in self.diag):
            raise ValueError("signature undefined: metric has zero entries")
        pos = sum(1 for d in self.diag if d > 0)
        return pos, len(self.diag) - pos


def build_metric(omega) -> MetricMatrix:
    om = OmegaVector.coerce(omega)
    return MetricMatrix(tuple(om.product(0, b) for b in range(om.n + 1)))


@dataclass(frozen=True)
class GeneratorLabel:
    """Label of a basis generator.

    variant "J": rotation-type, indices (a, b) with a < b (all families)
    variant "M": complex partner of J, indices (a, b)       (su, u)
    variant "B": diagonal torus generator, index (l,)       (su, u)
    variant "I": central phase i * identity, no indices     (u)
    variant "Mq": quaternionic partners, indices (alpha, a, b)  (sq)
    variant "E": diagonal quaternionic units, (alpha, a)        (sq)
    variant "Xi": the central generator adjoined by an extension
    """

    variant: str
    indices: tuple[int, ...]

    def __str__(self) -> str:
        v, idx = self.variant, self.indices
        if v == "J" or v == "M":
            return f"{v}({idx[0]},{idx[1]})"
        if v == "B":
            return f"B({idx[0]})"
        if v == "Mq":
            return f"M{idx[0]}({idx[1]},{idx[2]})"
        if v == "E":
            return f"E{idx[0]}({idx[1]})"
        return v

    __repr__ = __str__


def J(a: int, b: int) -> GeneratorLabel:
    if not 0 <= a < b:
        raise ValueError(f"J indices need 0 <= a < b, got ({a}, {b})")
    return GeneratorLabel("J", (a, b))


def M(a: int, b: int) -> GeneratorLabel:
    if not 0 <= a < b:
        raise ValueError(f"M indices need 0 <= a < b, got ({a}, {b})")
    return GeneratorLabel("M", (a, b))


def B(l: int) -> GeneratorLabel:
    if l < 1:
        raise ValueError(f"B index must be >= 1, got {l}")
    return GeneratorLabel("B", (l,))


def Mq(alpha: int, a: int, b: int) -> GeneratorLabel:
    if alpha not in (1, 2, 3):
        raise ValueError(f"quaternionic index must be 1..3, got {alpha}")
    if not 0 <= a < b:
        raise ValueError(f"Mq indices need 0 <= a < b, got ({a}, {b})")
    return GeneratorLabel("Mq", (alpha, a, b))


def E(alpha: int, a: int) -> GeneratorLabel:
    if alpha not in (1, 2, 3):
        raise ValueError(f"quaternionic index must be 1..3, got {alpha}")
    if a < 0:
        raise ValueError(f"E index must be >= 0, got {a}")
    return GeneratorLabel("E", (alpha, a))


I_LABEL = GeneratorLabel("I", ())
XI_LABEL = GeneratorLabel("Xi", ())


def labels_for_family(family: str, n: int) -> list[GeneratorLabel]:
    """Canonical basis order: J block (lex), then M/Mq, then B/E, then I.

    A fixed order makes structure constants and cochain indices reproducible
    across runs and machines.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    js = [J(a, b) for a in range(n + 1) for b in range(a + 1, n + 1)]
    if family == "so":
        return js
    if family in ("su", "u"):
        ms = [M(a, b) for a in range(n + 1) for b in range(a + 1, n + 1)]
        bs = [B(l) for l in range(1, n + 1)]
        out = js + ms + bs
        if family == "u":
            out.append(I_LABEL)
        return out
    mqs = [
        Mq(alpha, a, b)
        for alpha in (1, 2, 3)
        for a in range(n + 1)
        for b in range(a + 1, n + 1)
    ]
    es = [E(alpha, a) for alpha in (1, 2, 3) for a in range(n + 1)]
    return js + mqs + es


def family_dimension(family: str, n: int) -> int:
    if family == "so":
        return n * (n + 1) // 2
    if family == "su":
        return (n + 1) ** 2 - 1
    if family == "u":
        return (n + 1) ** 2
    if family == "sq":
        return 2 * (n + 1) ** 2 + (n + 1)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


class MatrixOverK:
    """Dense (dim x dim) matrix of Hypercomplex entries sharing one kind."""

    __slots__ = ("dim", "kind", "rows")

    def __init__(self, dim: int, kind: Kind, rows=None):
        self.dim = dim
        self.kind = kind
        if rows is None:
            z = Hypercomplex.zero(kind)
            rows = [[z] * dim for _ in range(dim)]
        self.rows = rows

    @classmethod
    def zero(cls, dim: int, kind: Kind) -> "MatrixOverK":
        return cls(dim, kind)

    @classmethod
    def elementary(cls, dim: int, a: int, b: int, value: Hypercomplex) -> "MatrixOverK":
        """Matrix with the single entry `value` in row a, column b."""
        out = cls(dim, value.kind)
        out.rows[a][b] = value
        return out

    @classmethod
    def diagonal(cls, values: Sequence[Hypercomplex], kind: Kind) -> "MatrixOverK":
        out = cls(len(values), kind)
        for i, v in enumerate(values):
            out.rows[i][i] = v.promote(kind) if v.kind < kind else v
        return out

    def _check_compat(self, other: "MatrixOverK"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.kind != other.kind:
            raise ValueError(f"kind mismatch: {self.kind.name} vs {other.kind.name}")

    def __add__(self, other: "MatrixOverK") -> "MatrixOverK":
        self._check_compat(other)
        rows = [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ]
        return MatrixOverK(self.dim, self.kind, rows)

    def __sub__(self, other: "MatrixOverK") -> "MatrixOverK":
        self._check_compat(other)
        rows = [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ]
        return MatrixOverK(self.dim, self.kind, rows)

    def __neg__(self) -> "MatrixOverK":
        rows = [[-a for a in ra] for ra in self.rows]
        return MatrixOverK(self.dim, self.kind, rows)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            rows = [[a * other for a in ra] for ra in self.rows]
            return MatrixOverK(self.dim, self.kind, rows)
        if not isinstance(other, MatrixOverK):
            return NotImplemented
        self._check_compat(other)
        d = self.dim
        z = Hypercomplex.zero(self.kind)
        out = [[z] * d for _ in range(d)]
        for i in range(d):
            arow = self.rows[i]
            orow = out[i]
            for k in range(d):
                a = arow[k]
                if a.is_zero():
                    continue
                brow = other.rows[k]
                for j in range(d):
                    b = brow[j]
                    if not b.is_zero():
                        orow[j] = orow[j] + a * b
        return MatrixOverK(d, self.kind, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def conj_transpose(self) -> "MatrixOverK":
        d = self.dim
        rows = [[self.rows[j][i].conjugate() for j in range(d)] for i in range(d)]
        return MatrixOverK(d, self.kind, rows)

    def trace(self) -> Hypercomplex:
        t = Hypercomplex.zero(self.kind)
        for i in range(self.dim):
            t = t + self.rows[i][i]
        return t

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixOverK):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.rows))

    def entries(self):
        """Yield (row, col, value) for nonzero entries in row-major order."""
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if not v.is_zero():
                    yield i, j, v

    def to_component_lists(self) -> list[list[list[str]]]:
        """JSON form: nested arrays of (w, x, y, z) component quadruples."""
        return [
            [[str(c) for c in v.components()] for v in row] for row in self.rows
        ]

    def __str__(self) -> str:
        cells = [[str(v) for v in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(
            "[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells
        )

    def __repr__(self) -> str:
        return f"MatrixOverK(dim={self.dim}, kind={self.kind.name})"


_FAMILY_VARIANTS = {
    "so": {"J"},
    "su": {"J", "M", "B"},
    "u": {"J", "M", "B", "I"},
    "sq": {"J", "Mq", "E"},
}


def build_generator(family: str, label: GeneratorLabel, omega) -> MatrixOverK:
    """The matrix realization of one labeled generator.

    J(a,b)      -> -w_ab e_ab + e_ba
    M(a,b)      -> i (w_ab e_ab + e_ba)
    B(l)        -> i (e_{l-1,l-1} - e_{l,l})
    I           -> i * identity
    Mq(al,a,b)  -> i_al (w_ab e_ab + e_ba)
    E(al,a)     -> i_al e_aa
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    om = OmegaVector.coerce(omega)
    if label.variant not in _FAMILY_VARIANTS[family]:
        raise ValueError(f"label {label} is not a {family} generator")
    n = om.n
    d = n + 1
    kind = FAMILY_KIND[family]
    out = MatrixOverK(d, kind)
    v = label.variant
    if v == "J":
        a, b = label.indices
        if b > n:
            raise ValueError(f"label {label} out of range for n={n}")
        out.rows[a][b] = Hypercomplex.real(-om.product(a, b), kind)
        out.rows[b][a] = Hypercomplex.real(_F1, kind)
        return out
    if v == "M":
        a, b = label.indices
        if b > n:
            raise ValueError(f"label {label} out of range for n={n}")
        out.rows[a][b] = Hypercomplex.imag_unit_multiple(1, om.product(a, b), kind)
        out.rows[b][a] = Hypercomplex.imag_unit_multiple(1, _F1, kind)
        return out
    if v == "B":
        (l,) = label.indices
        if l > n:
            raise ValueError(f"label {label} out of range for n={n}")
        out.rows[l - 1][l - 1] = Hypercomplex.imag_unit_multiple(1, _F1, kind)
        out.rows[l][l] = Hypercomplex.imag_unit_multiple(1, -_F1, kind)
        return out
    if v == "I":
        for a in range(d):
            out.rows[a][a] = Hypercomplex.imag_unit_multiple(1, _F1, kind)
        return out
    if v == "Mq":
        alpha, a, b = label.indices
        if b > n:
            raise ValueError(f"label {label} out of range for n={n}")
        out.rows[a][b] = Hypercomplex.imag_unit_multiple(alpha, om.product(a, b), kind)
        out.rows[b][a] = Hypercomplex.imag_unit_multiple(alpha, _F1, kind)
        return out
    if v == "E":
        alpha, a = label.indices
        if a > n:
            raise ValueError(f"label {label} out of range for n={n}")
        out.rows[a][a] = Hypercomplex.imag_unit_multiple(alpha, _F1, kind)
        return out
    raise ValueError(f"label {label} is not a generator label")


def is_metric_antihermitian(X: MatrixOverK, g: MetricMatrix) -> bool:
    """Exact test of conj-transpose(X) * G + G * X == 0 for diagonal metric G."""
    if X.dim != g.dim:
        raise ValueError(f"dimension mismatch: matrix {X.dim} vs metric {g.dim}")
    G = MatrixOverK.diagonal(
        [Hypercomplex.real(d, X.kind) for d in g.diag], X.kind
    )
    return (X.conj_transpose() * G + G * X).is_zero()


def is_traceless(X: MatrixOverK) -> bool:
    return X.trace().is_zero()


def mat_commutator(X: MatrixOverK, Y: MatrixOverK) -> MatrixOverK:
    return X * Y - Y * X


class NotInSpanError(ValueError):
    """A matrix fell outside the span of the supplied basis."""


def _flatten(mat: MatrixOverK) -> dict[int, Fraction]:
    """Row-major entries, then (w, x, y, z) per entry, as a sparse vector."""
    d = mat.dim
    out = {}
    for i, j, v in mat.entries():
        base = (i * d + j) * 4
        w, x, y, z = v.components()
        if w:
            out[base] = w
        if x:
            out[base + 1] = x
        if y:
            out[base + 2] = y
        if z:
            out[base + 3] = z
    return out


def _sub_scaled(target: dict, source: dict, factor: Fraction):
    for c, v in source.items():
        nv = target.get(c, _F0) - factor * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


class BasisDecomposer:
    """Reusable exact coordinate solver over a fixed independent basis.

    Flattens each basis matrix to its real components, keeps a reduced
    echelon of those vectors together with the combination that produced
    each echelon row, and recovers coordinates of any matrix in the span by
    plain reduction.  Built once per basis, used for every commutator.
    """

    def __init__(self, basis: Sequence[MatrixOverK]):
        if not basis:
            raise ValueError("basis must be nonempty")
        self.size = len(basis)
        self._pivot_slot: dict[int, int] = {}
        self._rows: list[dict[int, Fraction]] = []
        self._combos: list[dict[int, Fraction]] = []
        for idx, mat in enumerate(basis):
            row = _flatten(mat)
            combo = {idx: _F1}
            self._reduce(row, combo)
            if not row:
                raise ValueError(f"basis element {idx} depends on earlier elements")
            p = min(row)
            inv = _F1 / row[p]
            row = {c: v * inv for c, v in row.items()}
            combo = {c: v * inv for c, v in combo.items()}
            self._pivot_slot[p] = len(self._rows)
            self._rows.append(row)
            self._combos.append(combo)

    def _reduce(self, row: dict, combo: dict | None):
        while row:
            p = min(row)
            slot = self._pivot_slot.get(p)
            if slot is None:
                return
            f = row[p]
            _sub_scaled(row, self._rows[slot], f)
            if combo is not None:
                _sub_scaled(combo, self._combos[slot], f)

    def coefficients(self, mat: MatrixOverK) -> list[Fraction]:
        """Coordinates c with mat == sum(c_k * basis_k); NotInSpanError otherwise."""
        row = _flatten(mat)
        acc: dict[int, Fraction] = {}
        while row:
            p = min(row)
            slot = self._pivot_slot.get(p)
            if slot is None:
                raise NotInSpanError("matrix is not in the span of the basis")
            f = row[p]
            _sub_scaled(row, self._rows[slot], f)
            for k, v in self._combos[slot].items():
                nv = acc.get(k, _F0) + f * v
                if nv:
                    acc[k] = nv
                else:
                    acc.pop(k, None)
        return [acc.get(k, _F0) for k in range(self.size)]


def decompose_in_basis(X: MatrixOverK, basis: Sequence[MatrixOverK]) -> list[Fraction]:
    """One-shot decomposition; build a BasisDecomposer for repeated use."""
    return BasisDecomposer(basis).coefficients(X)
