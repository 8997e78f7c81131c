"""Finite-dimensional unital associative algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fields import Field, Scalar
from .linmap import (
    LinMap,
    ShapeError,
    apply,
    basis_vector,
    compose,
    first_difference,
    flip,
    identity,
    kron_vec,
    reshape,
    tensor_map,
    vectors_equal,
)
from .report import AxiomReport, LawCheck, law_from_maps


class GroupTableError(ValueError):
    """The given table is not a group Cayley table; the message names the axiom."""


class NonAssociativeError(ValueError):
    """The two bracketings of a triple product disagree."""


@dataclass(frozen=True)
class Algebra:
    """An algebra (A, mult, unit): mult maps A (x) A -> A, unit is a coordinate vector.

    Construction validates shapes only; the laws live in :func:`check_algebra`.
    """

    dim: int
    mult: LinMap
    unit: tuple[Scalar, ...]
    label: str = ""

    def __post_init__(self) -> None:
        m = self.dim
        if m <= 0:
            raise ShapeError("algebra dimension must be positive")
        if self.mult.domain_dims != (m, m) or self.mult.codomain_dims != (m,):
            raise ShapeError(
                f"multiplication must map ({m}, {m}) -> ({m},); got "
                f"{self.mult.domain_dims} -> {self.mult.codomain_dims}"
            )
        object.__setattr__(
            self, "unit", tuple(self.field.check(x) for x in self.unit)
        )
        if len(self.unit) != m:
            raise ShapeError(f"unit vector length {len(self.unit)} != dimension {m}")

    @property
    def field(self) -> Field:
        return self.mult.field

    def product(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Product of two coordinate vectors."""
        return apply(self.mult, kron_vec(self.field, u, v))

    def basis_product(self, i: int, j: int) -> tuple[Scalar, ...]:
        return self.mult.column(i * self.dim + j)


@dataclass(frozen=True)
class PointedSpace:
    """A vector space with a distinguished nonzero element."""

    dim: int
    point: tuple[Scalar, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if self.dim <= 0:
            raise ShapeError("space dimension must be positive")
        if len(self.point) != self.dim:
            raise ShapeError(f"point length {len(self.point)} != dimension {self.dim}")
        if all(x == 0 for x in self.point):
            raise ShapeError("distinguished point must be nonzero")


def check_algebra(a: Algebra) -> AxiomReport:
    """Verify associativity and both unit laws; failures are data, not errors."""
    field = a.field
    m = a.dim
    id_m = identity(field, (m,))
    checks = [
        law_from_maps(
            "assoc",
            compose(a.mult, tensor_map(a.mult, id_m)),
            compose(a.mult, tensor_map(id_m, a.mult)),
        )
    ]
    for law, left_unit in (("unit_left", True), ("unit_right", False)):
        failure = None
        for j in range(m):
            e_j = basis_vector(field, m, j)
            got = a.product(a.unit, e_j) if left_unit else a.product(e_j, a.unit)
            if not vectors_equal(field, got, e_j):
                failure = LawCheck(
                    law,
                    False,
                    first_counterexample=(j,),
                    detail=f"unit * e_{j} = {list(got)}" if left_unit else f"e_{j} * unit = {list(got)}",
                )
                break
        checks.append(failure if failure is not None else LawCheck(law, True))
    return AxiomReport(tuple(checks))


def mu2(a: Algebra) -> LinMap:
    """The triple product A (x) A (x) A -> A; both bracketings must agree."""
    id_m = identity(a.field, (a.dim,))
    right = compose(a.mult, tensor_map(id_m, a.mult))
    left = compose(a.mult, tensor_map(a.mult, id_m))
    diff = first_difference(right, left)
    if diff is not None:
        raise NonAssociativeError(
            f"triple product depends on bracketing; first difference on basis input {diff[0]}"
        )
    return right


def algebra_from_group(
    cayley_table: Sequence[Sequence[int]],
    identity_index: int,
    field: Field,
    label: str = "",
) -> Algebra:
    """Group algebra of a finite group given by a 0-based multiplication table."""
    n = len(cayley_table)
    if n == 0:
        raise GroupTableError("empty table")
    table = []
    for i, row in enumerate(cayley_table):
        if len(row) != n:
            raise GroupTableError(f"closure: row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if not isinstance(x, int) or not 0 <= x < n:
                raise GroupTableError(f"closure: entry ({i}, {j}) = {x!r} is not in [0, {n})")
        table.append([int(x) for x in row])
    if not 0 <= identity_index < n:
        raise GroupTableError(f"identity: index {identity_index} out of range")
    e = identity_index
    for i in range(n):
        if table[e][i] != i or table[i][e] != i:
            raise GroupTableError(f"identity: element {e} does not fix element {i}")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise GroupTableError(
                        f"associativity: fails on triple ({i}, {j}, {k})"
                    )
    for i in range(n):
        if e not in table[i]:
            raise GroupTableError(f"inverses: element {i} has no right inverse")
    one, zero = field.one(), field.zero()
    rows = []
    for k in range(n):
        row = [zero] * (n * n)
        for i in range(n):
            for j in range(n):
                if table[i][j] == k:
                    row[i * n + j] = one
        rows.append(tuple(row))
    mult = LinMap(field, (n, n), (n,), tuple(rows))
    return Algebra(n, mult, basis_vector(field, n, e), label=label)


def tensor_algebra(x: Algebra, y: Algebra, label: str = "") -> Algebra:
    """Componentwise product algebra on X (x) Y."""
    field = x.field
    mx, my = x.dim, y.dim
    mid = tensor_map(
        tensor_map(identity(field, (mx,)), flip(field, my, mx)), identity(field, (my,))
    )
    mult = compose(tensor_map(x.mult, y.mult), mid)
    mult = reshape(mult, (mx * my, mx * my), (mx * my,))
    return Algebra(
        mx * my,
        mult,
        kron_vec(field, x.unit, y.unit),
        label=label or f"{x.label}(x){y.label}",
    )


def tensor_power_algebra(a: Algebra, k: int) -> Algebra:
    if k < 1:
        raise ShapeError("tensor power requires k >= 1")
    out = a
    for _ in range(k - 1):
        out = tensor_algebra(out, a)
    return out


def tensor_elem_product(
    a: Algebra, k: int, u: Sequence[Scalar], v: Sequence[Scalar]
) -> tuple[Scalar, ...]:
    """Product of two elements of the k-fold tensor power algebra of ``a``.

    Works coordinatewise over the nonzero entries, so it stays cheap even
    where the full multiplication matrix of the power algebra would not.
    """
    from .linmap import flat_index, unflatten

    field = a.field
    m = a.dim
    dims = (m,) * k
    total = m**k
    if len(u) != total or len(v) != total:
        raise ShapeError(f"expected vectors of length {total} in the {k}-fold power")
    zero = field.zero()
    out = [zero] * total
    nz_u = [(unflatten(i, dims), x) for i, x in enumerate(u) if x != zero]
    nz_v = [(unflatten(i, dims), x) for i, x in enumerate(v) if x != zero]
    for ia, xa in nz_u:
        for ib, xb in nz_v:
            terms = [((), field.mul(xa, xb))]
            for t in range(k):
                col = a.basis_product(ia[t], ib[t])
                terms = [
                    (idx + (w,), field.mul(coeff, col[w]))
                    for idx, coeff in terms
                    for w in range(m)
                    if col[w] != zero
                ]
            for idx, coeff in terms:
                flat = flat_index(idx, dims)
                out[flat] = field.add(out[flat], coeff)
    return tuple(out)


def opposite_unit_insertion(a: Algebra, v: PointedSpace) -> LinMap:
    """The insertion V -> A (x) V sending each basis vector w to unit (x) w."""
    field = a.field
    cols = [kron_vec(field, a.unit, basis_vector(field, v.dim, j)) for j in range(v.dim)]
    rows = tuple(
        tuple(cols[j][i] for j in range(v.dim)) for i in range(a.dim * v.dim)
    )
    return LinMap(field, (v.dim,), (a.dim, v.dim), rows)
