"""Invariance under twisting: the maps R', sigma', the new crossed product,
and the certified isomorphism between the old and new products.

Given crossed data (A, V, R, sigma) and a pair of maps theta, gamma: V -> A(x)V
subject to four conditions, the twisted data (A, V, R', sigma') is again a
crossed product and phi(a (x) v) = a.theta(v) is an algebra isomorphism onto
the original one.  Every conclusion is certified here by exact matrix
identities; nothing is taken on faith from the constructions.

``sweedler_r_prime`` and ``sweedler_sigma_prime`` recompute R' and sigma' by
direct summation over structure constants.  They share no code with the
composite route and exist purely as cross-check oracles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import Algebra, PointedSpace, check_algebra, mu2, opposite_unit_insertion
from .crossed import (
    CrossedData,
    TwistingMapData,
    check_brz_axioms,
    check_twisting_map,
    crossed_mult,
    twisted_tensor_product,
)
from .linmap import (
    LinMap,
    MapBuilder,
    ShapeError,
    SingularMapError,
    apply,
    compose,
    identity,
    invert,
    kron_vec,
    maps_equal,
    random_matrix_map,
    tensor_map,
    vectors_equal,
)
from .report import AxiomReport, LawCheck, law_from_maps


class TwistPreconditionError(ValueError):
    """A required hypothesis fails; the message names the failed condition."""


class TheoremViolationError(RuntimeError):
    """An internally-verified conclusion failed; indicates an implementation bug."""


@dataclass(frozen=True)
class TwistPair:
    """The pair theta, gamma: V -> A (x) V."""

    theta: LinMap
    gamma: LinMap

    def __post_init__(self) -> None:
        for name, f in (("theta", self.theta), ("gamma", self.gamma)):
            if len(f.domain_dims) != 1 or len(f.codomain_dims) != 2:
                raise ShapeError(f"{name} must map (n,) -> (m, n); got {f.domain_dims} -> {f.codomain_dims}")
        if self.theta.domain_dims != self.gamma.domain_dims or self.theta.codomain_dims != self.gamma.codomain_dims:
            raise ShapeError("theta and gamma must have identical shapes")


@dataclass(frozen=True)
class TwistResult:
    r_prime: LinMap
    sigma_prime: LinMap
    data_prime: CrossedData
    phi: LinMap
    phi_inverse: LinMap


def trivial_pair(a: Algebra, v: PointedSpace) -> TwistPair:
    iota = opposite_unit_insertion(a, v)
    return TwistPair(theta=iota, gamma=iota)


def phi_map(a: Algebra, chi: LinMap) -> LinMap:
    """The endomorphism of A (x) V sending a (x) v to a.chi(v)."""
    id_a = identity(a.field, (a.dim,))
    return compose(tensor_map(a.mult, identity(a.field, chi.domain_dims)), tensor_map(id_a, chi))


def make_r_prime(c: CrossedData, t: TwistPair) -> LinMap:
    """R' = (mu2 (x) id).(id (x) id (x) gamma).(id (x) R).(theta (x) id)."""
    field = c.field
    m = c.a.dim
    id_a = identity(field, (m,))
    id_aa = tensor_map(id_a, id_a)
    return compose(
        tensor_map(mu2(c.a), identity(field, (c.v.dim,))),
        compose(
            tensor_map(id_aa, t.gamma),
            compose(tensor_map(id_a, c.r), tensor_map(t.theta, id_a)),
        ),
    )


def make_sigma_prime(c: CrossedData, t: TwistPair) -> LinMap:
    """sigma' = (mu (x) id).(id (x) gamma) applied after the old product of theta-images."""
    field = c.field
    id_a = identity(field, (c.a.dim,))
    id_v = identity(field, (c.v.dim,))
    return compose(
        tensor_map(c.a.mult, id_v),
        compose(
            tensor_map(id_a, t.gamma),
            compose(crossed_mult(c), tensor_map(t.theta, t.theta)),
        ),
    )


def _basis_product(mult: LinMap, m: int, i: int, j: int) -> tuple:
    # column of the structure-constant matrix, read directly
    col = i * m + j
    return tuple(mult.matrix[u][col] for u in range(m))


def _product_of_basis_chain(mult: LinMap, m: int, indices: list[int]) -> tuple:
    """Left-to-right product of basis elements, via structure constants only."""
    field = mult.field
    zero = field.zero()
    current = {indices[0]: field.one()}
    for nxt in indices[1:]:
        acc: dict[int, object] = {}
        for i, coeff in current.items():
            col = _basis_product(mult, m, i, nxt)
            for u in range(m):
                if col[u] != zero:
                    acc[u] = field.add(acc.get(u, zero), field.mul(coeff, col[u]))
        current = {u: x for u, x in acc.items() if x != zero}
    out = [zero] * m
    for u, x in current.items():
        out[u] = x
    return tuple(out)


def sweedler_r_prime(c: CrossedData, t: TwistPair) -> LinMap:
    """Independent expansion of R' by direct summation over tensor legs."""
    field = c.field
    m, n = c.a.dim, c.v.dim
    zero = field.zero()
    out = MapBuilder(field, (n, m), (m, n))
    for j in range(n):
        for k in range(m):
            col = j * m + k
            for p in range(m):
                for q in range(n):
                    c_theta = t.theta.matrix[p * n + q][j]
                    if c_theta == zero:
                        continue
                    for s in range(m):
                        for t2 in range(n):
                            c_r = c.r.matrix[s * n + t2][q * m + k]
                            if c_r == zero:
                                continue
                            for u in range(m):
                                for w in range(n):
                                    c_gamma = t.gamma.matrix[u * n + w][t2]
                                    if c_gamma == zero:
                                        continue
                                    coeff = field.mul(field.mul(c_theta, c_r), c_gamma)
                                    prod = _product_of_basis_chain(c.a.mult, m, [p, s, u])
                                    for x in range(m):
                                        if prod[x] != zero:
                                            out.add(x * n + w, col, field.mul(coeff, prod[x]))
    return out.build()


def sweedler_sigma_prime(c: CrossedData, t: TwistPair) -> LinMap:
    """Independent expansion of sigma' by direct summation over tensor legs."""
    field = c.field
    m, n = c.a.dim, c.v.dim
    zero = field.zero()
    out = MapBuilder(field, (n, n), (m, n))
    for j in range(n):
        for el in range(n):
            col = j * n + el
            for p in range(m):
                for q in range(n):
                    c_tv = t.theta.matrix[p * n + q][j]
                    if c_tv == zero:
                        continue
                    for p2 in range(m):
                        for q2 in range(n):
                            c_tw = t.theta.matrix[p2 * n + q2][el]
                            if c_tw == zero:
                                continue
                            for s in range(m):
                                for t2 in range(n):
                                    c_r = c.r.matrix[s * n + t2][q * m + p2]
                                    if c_r == zero:
                                        continue
                                    for u in range(m):
                                        for x in range(n):
                                            c_s = c.sigma.matrix[u * n + x][t2 * n + q2]
                                            if c_s == zero:
                                                continue
                                            for y in range(m):
                                                for z in range(n):
                                                    c_g = t.gamma.matrix[y * n + z][x]
                                                    if c_g == zero:
                                                        continue
                                                    coeff = field.mul(
                                                        field.mul(field.mul(c_tv, c_tw), field.mul(c_r, c_s)),
                                                        c_g,
                                                    )
                                                    prod = _product_of_basis_chain(
                                                        c.a.mult, m, [p, s, u, y]
                                                    )
                                                    for w in range(m):
                                                        if prod[w] != zero:
                                                            out.add(
                                                                w * n + z,
                                                                col,
                                                                field.mul(coeff, prod[w]),
                                                            )
    return out.build()


def check_pair_units(a: Algebra, v: PointedSpace, t: TwistPair) -> LawCheck:
    """Condition cros1: theta and gamma both send 1_V to 1_A (x) 1_V."""
    field = a.field
    want = kron_vec(field, a.unit, v.point)
    for name, f in (("theta", t.theta), ("gamma", t.gamma)):
        got = apply(f, v.point)
        if not vectors_equal(field, got, want):
            return LawCheck(
                "cros1",
                False,
                first_counterexample=(),
                detail=f"{name}(1_V) != 1_A (x) 1_V",
            )
    return LawCheck("cros1", True)


def check_mutual_inverse(a: Algebra, v: PointedSpace, t: TwistPair) -> tuple[LawCheck, LawCheck]:
    """Conditions cros2 and cros3 as map equalities against the unit insertion."""
    iota = opposite_unit_insertion(a, v)
    cros2 = law_from_maps("cros2", compose(phi_map(a, t.gamma), t.theta), iota)
    cros3 = law_from_maps("cros3", compose(phi_map(a, t.theta), t.gamma), iota)
    return cros2, cros3


def check_twist_conditions(c: CrossedData, t: TwistPair) -> AxiomReport:
    """All four twisting hypotheses; cros4 is evaluated against sigma' itself."""
    field = c.field
    m, n = c.a.dim, c.v.dim
    if t.theta.domain_dims != (n,) or t.theta.codomain_dims != (m, n):
        raise ShapeError(
            f"pair must map ({n},) -> ({m}, {n}); got {t.theta.domain_dims} -> {t.theta.codomain_dims}"
        )
    id_a, id_v = identity(field, (m,)), identity(field, (n,))
    checks = [check_pair_units(c.a, c.v, t)]
    checks.extend(check_mutual_inverse(c.a, c.v, t))

    # cros4 references sigma', so it is computed first.
    sigma_prime = make_sigma_prime(c, t)
    lhs = compose(
        tensor_map(c.a.mult, id_v),
        compose(
            tensor_map(c.a.mult, sigma_prime),
            compose(
                tensor_map(tensor_map(id_a, t.gamma), id_v),
                compose(tensor_map(c.r, id_v), tensor_map(id_v, t.gamma)),
            ),
        ),
    )
    rhs = compose(tensor_map(c.a.mult, id_v), compose(tensor_map(id_a, t.gamma), c.sigma))
    checks.append(law_from_maps("cros4", lhs, rhs))
    return AxiomReport(tuple(checks))


def verify_twist_result(c: CrossedData, result: TwistResult) -> AxiomReport:
    """Re-check a twist outcome: the five axioms for the new data plus the
    three isomorphism identities for phi against both products."""
    field = c.field
    m, n = c.a.dim, c.v.dim
    checks = list(check_brz_axioms(result.data_prime).checks)

    id_av = identity(field, (m, n))
    fwd = compose(result.phi, result.phi_inverse)
    bwd = compose(result.phi_inverse, result.phi)
    if maps_equal(fwd, id_av) and maps_equal(bwd, id_av):
        checks.append(LawCheck("phi_invertible", True))
    else:
        bad = law_from_maps("phi_invertible", fwd, id_av)
        if bad.passed:
            bad = law_from_maps("phi_invertible", bwd, id_av)
        checks.append(bad)

    one = kron_vec(field, c.a.unit, c.v.point)
    if vectors_equal(field, apply(result.phi, one), one):
        checks.append(LawCheck("phi_unital", True))
    else:
        checks.append(
            LawCheck("phi_unital", False, first_counterexample=(), detail="phi(1 (x) 1) != 1 (x) 1")
        )

    checks.append(
        law_from_maps(
            "phi_mult",
            compose(crossed_mult(c), tensor_map(result.phi, result.phi)),
            compose(result.phi, crossed_mult(result.data_prime)),
        )
    )
    return AxiomReport(tuple(checks))


def apply_twist(c: CrossedData, t: TwistPair) -> TwistResult:
    """Run the full twist: validate hypotheses, build (R', sigma'), certify phi.

    Raises :class:`TwistPreconditionError` when a hypothesis fails and
    :class:`TheoremViolationError` if any certified conclusion fails, which
    cannot happen on valid inputs unless the implementation is wrong.
    """
    rep = check_brz_axioms(c)
    if not rep.passed:
        bad = rep.failures[0]
        raise TwistPreconditionError(f"crossed data fails {bad.law}: {bad.detail}")
    rep = check_twist_conditions(c, t)
    if not rep.passed:
        bad = rep.failures[0]
        raise TwistPreconditionError(f"twist pair fails {bad.law}: {bad.detail}")

    r_prime = make_r_prime(c, t)
    sigma_prime = make_sigma_prime(c, t)
    result = TwistResult(
        r_prime=r_prime,
        sigma_prime=sigma_prime,
        data_prime=CrossedData(a=c.a, v=c.v, r=r_prime, sigma=sigma_prime, label=c.label),
        phi=phi_map(c.a, t.theta),
        phi_inverse=phi_map(c.a, t.gamma),
    )
    verification = verify_twist_result(c, result)
    if not verification.passed:
        bad = verification.failures[0]
        raise TheoremViolationError(
            f"certified conclusion {bad.law} failed on valid inputs: {bad.detail}"
        )
    return result


def specialize_ttp(t: TwistingMapData, star: LinMap, pair: TwistPair) -> AxiomReport:
    """Twisted-tensor-product specialization of the twist theorem.

    Checks that theta is an algebra map from (B, star) into the twisted tensor
    product, the unit conditions, rel1..rel3, and the derived identity
    sigma'(b, b') = 1_A (x) (b star b').
    """
    rep = check_twisting_map(t)
    if not rep.passed:
        bad = rep.failures[0]
        raise TwistPreconditionError(f"twisting map fails {bad.law}: {bad.detail}")
    nb = t.b.dim
    if star.domain_dims != (nb, nb) or star.codomain_dims != (nb,):
        raise ShapeError(
            f"star must map ({nb}, {nb}) -> ({nb},); got {star.domain_dims} -> {star.codomain_dims}"
        )
    b_star = Algebra(nb, star, t.b.unit, label="B-star")
    rep = check_algebra(b_star)
    if not rep.passed:
        bad = rep.failures[0]
        raise TwistPreconditionError(
            f"star multiplication fails {bad.law} with the unit of B: {bad.detail}"
        )

    field = t.field
    m = t.a.dim
    data = twisted_tensor_product(t)
    mu_ttp = crossed_mult(data)
    id_a, id_b = identity(field, (m,)), identity(field, (nb,))

    checks = [check_pair_units(t.a, data.v, pair)]
    checks.append(
        law_from_maps(
            "theta_mult",
            compose(pair.theta, star),
            compose(mu_ttp, tensor_map(pair.theta, pair.theta)),
        )
    )

    # rel1: gamma of a product, rewritten through R and the star product.
    lhs = compose(pair.gamma, t.b.mult)
    rhs = compose(
        tensor_map(t.a.mult, star),
        compose(
            tensor_map(tensor_map(id_a, pair.gamma), id_b),
            compose(tensor_map(t.r, id_b), tensor_map(id_b, pair.gamma)),
        ),
    )
    checks.append(law_from_maps("rel1", lhs, rhs))

    cros2, cros3 = check_mutual_inverse(t.a, data.v, pair)
    checks.append(LawCheck("rel2", cros2.passed, cros2.first_counterexample, cros2.detail))
    checks.append(LawCheck("rel3", cros3.passed, cros3.first_counterexample, cros3.detail))

    iota = opposite_unit_insertion(t.a, data.v)
    checks.append(
        law_from_maps("sigma_prime_ttp", make_sigma_prime(data, pair), compose(iota, star))
    )
    return AxiomReport(tuple(checks))


def random_twist_pair(
    a: Algebra,
    v: PointedSpace,
    rng: random.Random,
    max_tries: int = 200,
) -> TwistPair:
    """Seeded random pair with cros1..cros3 holding by construction.

    theta is drawn with small integer entries, corrected so theta(point) is
    the inserted unit, and resampled until the induced endomorphism of
    A (x) V is invertible; gamma is then forced to be its inverse on the
    inserted copy of V, which makes the two induced endomorphisms mutually
    inverse.  The remaining condition on sigma is a genuine constraint and is
    left to the caller to test.
    """
    field = a.field
    m, n = a.dim, v.dim
    pivot = next((i for i, x in enumerate(v.point) if x != field.zero()), None)
    if pivot is None:
        raise ShapeError("pointed space has a zero point")
    target = kron_vec(field, a.unit, v.point)
    for _ in range(max_tries):
        candidate = random_matrix_map(field, (n,), (m, n), rng)
        cols = [list(candidate.column(j)) for j in range(n)]
        # overwrite the pivot column so that theta(point) = 1_A (x) point
        inv_pivot = field.inv(v.point[pivot])
        for i in range(m * n):
            acc = target[i]
            for j in range(n):
                if j != pivot and v.point[j] != field.zero():
                    acc = field.sub(acc, field.mul(v.point[j], cols[j][i]))
            cols[pivot][i] = field.mul(inv_pivot, acc)
        rows = tuple(tuple(cols[j][i] for j in range(n)) for i in range(m * n))
        theta = LinMap(field, (n,), (m, n), rows)
        try:
            inverse = invert(phi_map(a, theta))
        except SingularMapError:
            continue
        gamma = compose(inverse, opposite_unit_insertion(a, v))
        return TwistPair(theta=theta, gamma=gamma)
    raise RuntimeError(f"no invertible twist pair found in {max_tries} draws")
