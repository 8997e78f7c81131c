"""Crossed-product data (A, V, R, sigma), its five axioms, and the product algebra.

The five conditions are evaluated as exact equalities of composite matrices;
the two unit conditions are applied to slices at the distinguished elements so
failure indices stay interpretable.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .algebra import Algebra, PointedSpace, check_algebra, mu2, opposite_unit_insertion
from .fields import Field
from .linmap import (
    LinMap,
    ShapeError,
    apply,
    basis_vector,
    compose,
    identity,
    kron_vec,
    reshape,
    tensor_map,
    vectors_equal,
)
from .report import AxiomReport, LawCheck, law_from_maps


class InvalidDataError(ValueError):
    """Construction from data that fails a required axiom; names the law."""


@dataclass(frozen=True)
class CrossedData:
    """The quadruple (A, V, R, sigma) with R: V(x)A -> A(x)V and sigma: V(x)V -> A(x)V."""

    a: Algebra
    v: PointedSpace
    r: LinMap
    sigma: LinMap
    label: str = ""

    def __post_init__(self) -> None:
        m, n = self.a.dim, self.v.dim
        if self.r.domain_dims != (n, m) or self.r.codomain_dims != (m, n):
            raise ShapeError(
                f"r must map ({n}, {m}) -> ({m}, {n}); got "
                f"{self.r.domain_dims} -> {self.r.codomain_dims}"
            )
        if self.sigma.domain_dims != (n, n) or self.sigma.codomain_dims != (m, n):
            raise ShapeError(
                f"sigma must map ({n}, {n}) -> ({m}, {n}); got "
                f"{self.sigma.domain_dims} -> {self.sigma.codomain_dims}"
            )
        if self.r.field != self.a.field or self.sigma.field != self.a.field:
            raise ShapeError("r and sigma must live over the algebra's field")

    @property
    def field(self) -> Field:
        return self.a.field


@dataclass(frozen=True)
class TwistingMapData:
    """Two algebras A, B and a candidate twisting map R: B(x)A -> A(x)B."""

    a: Algebra
    b: Algebra
    r: LinMap

    def __post_init__(self) -> None:
        m, n = self.a.dim, self.b.dim
        if self.r.domain_dims != (n, m) or self.r.codomain_dims != (m, n):
            raise ShapeError(
                f"twisting map must map ({n}, {m}) -> ({m}, {n}); got "
                f"{self.r.domain_dims} -> {self.r.codomain_dims}"
            )

    @property
    def field(self) -> Field:
        return self.a.field


def check_twisting_map(t: TwistingMapData) -> AxiomReport:
    """The four twisting-map conditions tw1..tw4, each as an exact identity."""
    field = t.field
    m, n = t.a.dim, t.b.dim
    id_a, id_b = identity(field, (m,)), identity(field, (n,))
    checks = []

    failure = None
    for k in range(m):
        got = apply(t.r, kron_vec(field, t.b.unit, basis_vector(field, m, k)))
        want = kron_vec(field, basis_vector(field, m, k), t.b.unit)
        if not vectors_equal(field, got, want):
            failure = LawCheck(
                "tw1", False, first_counterexample=(k,), detail=f"R(1_B (x) a_{k}) != a_{k} (x) 1_B"
            )
            break
    checks.append(failure if failure is not None else LawCheck("tw1", True))

    failure = None
    for j in range(n):
        got = apply(t.r, kron_vec(field, basis_vector(field, n, j), t.a.unit))
        want = kron_vec(field, t.a.unit, basis_vector(field, n, j))
        if not vectors_equal(field, got, want):
            failure = LawCheck(
                "tw2", False, first_counterexample=(j,), detail=f"R(b_{j} (x) 1_A) != 1_A (x) b_{j}"
            )
            break
    checks.append(failure if failure is not None else LawCheck("tw2", True))

    checks.append(
        law_from_maps(
            "tw3",
            compose(t.r, tensor_map(id_b, t.a.mult)),
            compose(
                tensor_map(t.a.mult, id_b),
                compose(tensor_map(id_a, t.r), tensor_map(t.r, id_a)),
            ),
        )
    )
    checks.append(
        law_from_maps(
            "tw4",
            compose(t.r, tensor_map(t.b.mult, id_a)),
            compose(
                tensor_map(id_a, t.b.mult),
                compose(tensor_map(t.r, id_b), tensor_map(id_b, t.r)),
            ),
        )
    )
    return AxiomReport(tuple(checks))


def twisted_tensor_product(t: TwistingMapData) -> CrossedData:
    """Crossed data of a twisted tensor product: sigma(b, b') = 1_A (x) bb'."""
    for algebra, name in ((t.a, "A"), (t.b, "B")):
        rep = check_algebra(algebra)
        if not rep.passed:
            raise InvalidDataError(
                f"algebra {name} fails {rep.failures[0].law}: {rep.failures[0].detail}"
            )
    rep = check_twisting_map(t)
    if not rep.passed:
        bad = rep.failures[0]
        raise InvalidDataError(f"twisting map fails {bad.law}: {bad.detail}")
    v = PointedSpace(t.b.dim, t.b.unit, label=t.b.label)
    iota = opposite_unit_insertion(t.a, v)
    return CrossedData(
        a=t.a,
        v=v,
        r=t.r,
        sigma=compose(iota, t.b.mult),
        label=f"{t.a.label}(x){t.b.label} twisted",
    )


def check_brz_axioms(c: CrossedData) -> AxiomReport:
    """The five crossed-product conditions, in order, as exact equalities."""
    field = c.field
    m, n = c.a.dim, c.v.dim
    id_a, id_v = identity(field, (m,)), identity(field, (n,))
    mu = c.a.mult
    checks = []

    # brz1: R(1_V (x) a) = a (x) 1_V and R(v (x) 1_A) = 1_A (x) v.
    failure = None
    for k in range(m):
        got = apply(c.r, kron_vec(field, c.v.point, basis_vector(field, m, k)))
        want = kron_vec(field, basis_vector(field, m, k), c.v.point)
        if not vectors_equal(field, got, want):
            failure = LawCheck(
                "brz1", False, first_counterexample=(k,), detail=f"R(1_V (x) a_{k}) != a_{k} (x) 1_V"
            )
            break
    if failure is None:
        for j in range(n):
            got = apply(c.r, kron_vec(field, basis_vector(field, n, j), c.a.unit))
            want = kron_vec(field, c.a.unit, basis_vector(field, n, j))
            if not vectors_equal(field, got, want):
                failure = LawCheck(
                    "brz1",
                    False,
                    first_counterexample=(j,),
                    detail=f"R(v_{j} (x) 1_A) != 1_A (x) v_{j}",
                )
                break
    checks.append(failure if failure is not None else LawCheck("brz1", True))

    # brz2: sigma(1_V, v) = sigma(v, 1_V) = 1_A (x) v.
    failure = None
    for j in range(n):
        e_j = basis_vector(field, n, j)
        want = kron_vec(field, c.a.unit, e_j)
        left = apply(c.sigma, kron_vec(field, c.v.point, e_j))
        right = apply(c.sigma, kron_vec(field, e_j, c.v.point))
        if not vectors_equal(field, left, want):
            failure = LawCheck(
                "brz2", False, first_counterexample=(j,), detail=f"sigma(1_V, v_{j}) != 1_A (x) v_{j}"
            )
            break
        if not vectors_equal(field, right, want):
            failure = LawCheck(
                "brz2", False, first_counterexample=(j,), detail=f"sigma(v_{j}, 1_V) != 1_A (x) v_{j}"
            )
            break
    checks.append(failure if failure is not None else LawCheck("brz2", True))

    checks.append(
        law_from_maps(
            "brz3",
            compose(c.r, tensor_map(id_v, mu)),
            compose(
                tensor_map(mu, id_v),
                compose(tensor_map(id_a, c.r), tensor_map(c.r, id_a)),
            ),
        )
    )

    mu_sigma = compose(tensor_map(mu, id_v), tensor_map(id_a, c.sigma))
    checks.append(
        law_from_maps(
            "brz4",
            compose(mu_sigma, compose(tensor_map(c.r, id_v), tensor_map(id_v, c.sigma))),
            compose(mu_sigma, tensor_map(c.sigma, id_v)),
        )
    )
    checks.append(
        law_from_maps(
            "brz5",
            compose(mu_sigma, compose(tensor_map(c.r, id_v), tensor_map(id_v, c.r))),
            compose(
                compose(tensor_map(mu, id_v), tensor_map(id_a, c.r)),
                tensor_map(c.sigma, id_a),
            ),
        )
    )
    return AxiomReport(tuple(checks))


def crossed_mult(c: CrossedData) -> LinMap:
    """The product on A (x) V as a map (m, n, m, n) -> (m, n)."""
    field = c.field
    m, n = c.a.dim, c.v.dim
    id_a, id_v = identity(field, (m,)), identity(field, (n,))
    return compose(
        tensor_map(mu2(c.a), id_v),
        compose(
            tensor_map(tensor_map(id_a, id_a), c.sigma),
            tensor_map(tensor_map(id_a, c.r), id_v),
        ),
    )


def build_crossed_product(c: CrossedData) -> Algebra:
    """The crossed-product algebra on A (x) V; refuses unverified data."""
    rep = check_algebra(c.a)
    if not rep.passed:
        bad = rep.failures[0]
        raise InvalidDataError(f"underlying algebra fails {bad.law}: {bad.detail}")
    rep = check_brz_axioms(c)
    if not rep.passed:
        bad = rep.failures[0]
        raise InvalidDataError(f"crossed data fails {bad.law}: {bad.detail}")
    m, n = c.a.dim, c.v.dim
    mult = reshape(crossed_mult(c), (m * n, m * n), (m * n,))
    return Algebra(
        m * n,
        mult,
        kron_vec(c.field, c.a.unit, c.v.point),
        label=c.label or "crossed product",
    )


def with_r(c: CrossedData, r: LinMap) -> CrossedData:
    return replace(c, r=r)


def with_sigma(c: CrossedData, sigma: LinMap) -> CrossedData:
    return replace(c, sigma=sigma)
