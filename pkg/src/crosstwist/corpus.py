"""Built-in example families: smash products of quasi-bialgebras acting on
module algebras, gauge twists of both, and twisted tensor products.

Every constructor validates its inputs and rejects with the name of the
violated law.  Corpus generation is deterministic: the same field yields
byte-identical instances on every run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    Algebra,
    PointedSpace,
    algebra_from_group,
    check_algebra,
    tensor_algebra,
    tensor_elem_product,
)
from .crossed import CrossedData, TwistingMapData, twisted_tensor_product
from .fields import Field, Rationals, Scalar
from .linmap import (
    LinMap,
    MapBuilder,
    ShapeError,
    apply,
    basis_vector,
    compose,
    flip,
    identity,
    kron_vec,
    maps_equal,
    reshape,
    tensor_map,
    vectors_equal,
)
from .twist import TheoremViolationError, TwistPair, trivial_pair


class CorpusError(ValueError):
    """Input data violates a required law; the message names it."""


@dataclass(frozen=True)
class QuasiBialgebra:
    """An algebra with comultiplication, counit and an invertible associator.

    Coassociativity is only required up to conjugation by the associator.
    """

    algebra: Algebra
    comult: LinMap
    counit: LinMap
    associator: tuple[Scalar, ...]
    associator_inverse: tuple[Scalar, ...]
    label: str = ""

    def __post_init__(self) -> None:
        m = self.algebra.dim
        if self.comult.domain_dims != (m,) or self.comult.codomain_dims != (m, m):
            raise ShapeError(f"comult must map ({m},) -> ({m}, {m})")
        if self.counit.domain_dims != (m,) or self.counit.codomain_dims != (1,):
            raise ShapeError(f"counit must map ({m},) -> (1,)")
        if len(self.associator) != m**3 or len(self.associator_inverse) != m**3:
            raise ShapeError(f"associator must have {m ** 3} coordinates")

    @property
    def field(self) -> Field:
        return self.algebra.field

    def counit_value(self, k: int) -> Scalar:
        return self.counit.matrix[0][k]


@dataclass(frozen=True)
class GaugeTransformation:
    """A counital invertible element of H (x) H, given with its inverse."""

    f: tuple[Scalar, ...]
    f_inverse: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.f) != len(self.f_inverse):
            raise ShapeError("gauge element and inverse must have equal length")


@dataclass(frozen=True)
class RightModuleAlgebra:
    """A not-necessarily-associative algebra carrying a right action of H.

    The multiplication is only associative up to the associator of the acting
    quasi-bialgebra, so no plain associativity is demanded here.
    """

    dim: int
    mult: LinMap
    unit: tuple[Scalar, ...]
    action: LinMap
    label: str = ""

    def __post_init__(self) -> None:
        nb = self.dim
        if self.mult.domain_dims != (nb, nb) or self.mult.codomain_dims != (nb,):
            raise ShapeError(f"multiplication must map ({nb}, {nb}) -> ({nb},)")
        if len(self.action.domain_dims) != 2 or self.action.domain_dims[0] != nb:
            raise ShapeError(f"action must map ({nb}, dim H) -> ({nb},)")
        if self.action.codomain_dims != (nb,):
            raise ShapeError(f"action must land in ({nb},)")
        if len(self.unit) != nb:
            raise ShapeError("unit length mismatch")

    @property
    def field(self) -> Field:
        return self.mult.field

    @property
    def acting_dim(self) -> int:
        return self.action.domain_dims[1]


def quasi_bialgebra_violations(q: QuasiBialgebra) -> list[str]:
    """Core laws: algebra maps, counit laws, invertible associator,
    quasi-coassociativity, and the counit normalizations of the associator."""
    field = q.field
    m = q.algebra.dim
    id_h = identity(field, (m,))
    out: list[str] = []

    rep = check_algebra(q.algebra)
    if not rep.passed:
        out.append(f"underlying algebra fails {rep.failures[0].law}")

    h2 = tensor_algebra(q.algebra, q.algebra)
    if not maps_equal(
        compose(q.comult, q.algebra.mult),
        compose(reshape(h2.mult, (m, m, m, m), (m, m)), tensor_map(q.comult, q.comult)),
    ):
        out.append("comult_algebra_map: comultiplication is not multiplicative")
    if not vectors_equal(field, apply(q.comult, q.algebra.unit), kron_vec(field, q.algebra.unit, q.algebra.unit)):
        out.append("comult_algebra_map: comultiplication does not preserve the unit")

    mult_k = LinMap(field, (1, 1), (1,), ((field.one(),),))
    if not maps_equal(
        compose(q.counit, q.algebra.mult),
        compose(mult_k, tensor_map(q.counit, q.counit)),
    ):
        out.append("counit_algebra_map: counit is not multiplicative")
    if apply(q.counit, q.algebra.unit) != (field.one(),):
        out.append("counit_algebra_map: counit of the unit is not 1")

    left = reshape(compose(tensor_map(q.counit, id_h), q.comult), (m,), (m,))
    right = reshape(compose(tensor_map(id_h, q.counit), q.comult), (m,), (m,))
    if not (maps_equal(left, id_h) and maps_equal(right, id_h)):
        out.append("counit_laws: (counit (x) id).comult or (id (x) counit).comult != id")

    unit3 = kron_vec(field, kron_vec(field, q.algebra.unit, q.algebra.unit), q.algebra.unit)
    if not (
        vectors_equal(field, tensor_elem_product(q.algebra, 3, q.associator, q.associator_inverse), unit3)
        and vectors_equal(field, tensor_elem_product(q.algebra, 3, q.associator_inverse, q.associator), unit3)
    ):
        out.append("associator_invertible: associator * inverse != unit")

    co2_left = compose(tensor_map(q.comult, id_h), q.comult)
    co2_right = compose(tensor_map(id_h, q.comult), q.comult)
    for k in range(m):
        lhs = tensor_elem_product(q.algebra, 3, q.associator, co2_left.column(k))
        rhs = tensor_elem_product(q.algebra, 3, co2_right.column(k), q.associator)
        if not vectors_equal(field, lhs, rhs):
            out.append(f"quasi_coassociativity: fails on basis element {k}")
            break

    unit2 = kron_vec(field, q.algebra.unit, q.algebra.unit)
    for name, elem in (("associator", q.associator), ("associator_inverse", q.associator_inverse)):
        for slot, contraction in (
            (0, tensor_map(q.counit, tensor_map(id_h, id_h))),
            (1, tensor_map(id_h, tensor_map(q.counit, id_h))),
            (2, tensor_map(id_h, tensor_map(id_h, q.counit))),
        ):
            if not vectors_equal(field, apply(contraction, elem), unit2):
                out.append(f"associator_counital: counit in slot {slot} of {name} != 1 (x) 1")
    return out


def pentagon_violations(q: QuasiBialgebra) -> list[str]:
    """The pentagon law, reported separately from the core laws."""
    field = q.field
    m = q.algebra.dim
    id_h = identity(field, (m,))
    id_hh = tensor_map(id_h, id_h)
    lhs = tensor_elem_product(
        q.algebra,
        4,
        apply(tensor_map(id_hh, q.comult), q.associator),
        apply(tensor_map(q.comult, id_hh), q.associator),
    )
    rhs = tensor_elem_product(
        q.algebra,
        4,
        kron_vec(field, q.algebra.unit, q.associator),
        tensor_elem_product(
            q.algebra,
            4,
            apply(tensor_map(id_h, tensor_map(q.comult, id_h)), q.associator),
            kron_vec(field, q.associator, q.algebra.unit),
        ),
    )
    if not vectors_equal(field, lhs, rhs):
        return ["pentagon: the two reassociation paths differ"]
    return []


def gauge_violations(q: QuasiBialgebra, f: GaugeTransformation) -> list[str]:
    field = q.field
    m = q.algebra.dim
    out: list[str] = []
    if len(f.f) != m * m:
        return [f"gauge_shape: expected length {m * m}, got {len(f.f)}"]
    unit2 = kron_vec(field, q.algebra.unit, q.algebra.unit)
    if not (
        vectors_equal(field, tensor_elem_product(q.algebra, 2, f.f, f.f_inverse), unit2)
        and vectors_equal(field, tensor_elem_product(q.algebra, 2, f.f_inverse, f.f), unit2)
    ):
        out.append("gauge_invertible: F * F^{-1} != 1 (x) 1")
    id_h = identity(field, (m,))
    left = apply(tensor_map(q.counit, id_h), f.f)
    right = apply(tensor_map(id_h, q.counit), f.f)
    if not (vectors_equal(field, left, q.algebra.unit) and vectors_equal(field, right, q.algebra.unit)):
        out.append("gauge_counital: a counit contraction of F is not the unit")
    return out


def module_algebra_violations(q: QuasiBialgebra, b: RightModuleAlgebra) -> list[str]:
    """Laws making B an algebra in right H-modules, with associativity twisted
    by the associator of H."""
    field = q.field
    m, nb = q.algebra.dim, b.dim
    out: list[str] = []
    if b.acting_dim != m:
        return [f"action_shape: acts on dimension {b.acting_dim}, bialgebra has {m}"]
    id_h = identity(field, (m,))
    id_b = identity(field, (nb,))

    for j in range(nb):
        e_j = basis_vector(field, nb, j)
        if not vectors_equal(field, apply(b.action, kron_vec(field, e_j, q.algebra.unit)), e_j):
            out.append(f"action_unital: b_{j} . 1_H != b_{j}")
            break
    for k in range(m):
        got = apply(b.action, kron_vec(field, b.unit, basis_vector(field, m, k)))
        eps = q.counit_value(k)
        want = tuple(field.mul(eps, x) for x in b.unit)
        if not vectors_equal(field, got, want):
            out.append(f"unit_action: 1_B . h_{k} != counit(h_{k}) 1_B")
            break

    if not maps_equal(
        compose(b.action, tensor_map(b.action, id_h)),
        compose(b.action, tensor_map(id_b, q.algebra.mult)),
    ):
        out.append("module_law: (b . h) . h' != b . (h h')")

    rhs = compose(
        b.mult,
        compose(
            tensor_map(b.action, b.action),
            compose(
                tensor_map(tensor_map(id_b, flip(field, nb, m)), id_h),
                tensor_map(tensor_map(id_b, id_b), q.comult),
            ),
        ),
    )
    if not maps_equal(compose(b.action, tensor_map(b.mult, id_h)), rhs):
        out.append("mult_action_compatible: (b b') . h != (b . h_1)(b' . h_2)")

    reassoc = MapBuilder(field, (nb, nb, nb), (nb, nb, nb))
    zero = field.zero()
    phi_inv = q.associator_inverse
    for flat in (i for i, x in enumerate(phi_inv) if x != zero):
        p, qq, r = flat // (m * m), (flat // m) % m, flat % m
        coeff = phi_inv[flat]
        for j in range(nb):
            col1 = tuple(b.action.matrix[u][j * m + p] for u in range(nb))
            for k in range(nb):
                col2 = tuple(b.action.matrix[u][k * m + qq] for u in range(nb))
                for el in range(nb):
                    col3 = tuple(b.action.matrix[u][el * m + r] for u in range(nb))
                    col = (j * nb + k) * nb + el
                    for u in range(nb):
                        if col1[u] == zero:
                            continue
                        for v in range(nb):
                            if col2[v] == zero:
                                continue
                            for w in range(nb):
                                if col3[w] == zero:
                                    continue
                                reassoc.add(
                                    (u * nb + v) * nb + w,
                                    col,
                                    field.mul(
                                        field.mul(coeff, col1[u]),
                                        field.mul(col2[v], col3[w]),
                                    ),
                                )
    twisted = compose(b.mult, compose(tensor_map(id_b, b.mult), reassoc.build()))
    if not maps_equal(compose(b.mult, tensor_map(b.mult, id_b)), twisted):
        out.append("assoc_twisted: (b b') b'' != (b . x1)((b' . x2)(b'' . x3))")
    return out


def _require_valid(violations: list[str], context: str) -> None:
    if violations:
        raise CorpusError(f"{context}: {violations[0]}")


def smash_product_data(h: QuasiBialgebra, b: RightModuleAlgebra) -> CrossedData:
    """Crossed data of the smash product of H acting on B from the right:
    R(b (x) h) = h_1 (x) b . h_2 and sigma(b, b') = x1 (x) (b . x2)(b' . x3)
    summed over the inverse associator x1 (x) x2 (x) x3."""
    _require_valid(quasi_bialgebra_violations(h), "quasi-bialgebra")
    _require_valid(module_algebra_violations(h, b), "module algebra")
    field = h.field
    m, nb = h.algebra.dim, b.dim
    id_h = identity(field, (m,))
    id_b = identity(field, (nb,))

    r = compose(
        tensor_map(id_h, b.action),
        compose(tensor_map(flip(field, nb, m), id_h), tensor_map(id_b, h.comult)),
    )

    zero = field.zero()
    sigma = MapBuilder(field, (nb, nb), (m, nb))
    for flat, coeff in enumerate(h.associator_inverse):
        if coeff == zero:
            continue
        p = flat // (m * m)
        q = (flat // m) % m
        rr = flat % m
        for j in range(nb):
            col1 = tuple(b.action.matrix[x][j * m + q] for x in range(nb))
            for el in range(nb):
                col2 = tuple(b.action.matrix[y][el * m + rr] for y in range(nb))
                for x in range(nb):
                    if col1[x] == zero:
                        continue
                    for y in range(nb):
                        if col2[y] == zero:
                            continue
                        c = field.mul(coeff, field.mul(col1[x], col2[y]))
                        prod = b.mult.column(x * nb + y)
                        for u in range(nb):
                            if prod[u] != zero:
                                sigma.add(p * nb + u, j * nb + el, field.mul(c, prod[u]))

    return CrossedData(
        a=h.algebra,
        v=PointedSpace(nb, b.unit, label=b.label),
        r=r,
        sigma=sigma.build(),
        label=f"{h.label or h.algebra.label}#{b.label}",
    )


def drinfeld_twist(h: QuasiBialgebra, f: GaugeTransformation) -> QuasiBialgebra:
    """Twist of the comultiplication and associator by a gauge element."""
    _require_valid(quasi_bialgebra_violations(h), "quasi-bialgebra")
    _require_valid(gauge_violations(h, f), "gauge transformation")
    field = h.field
    m = h.algebra.dim
    alg = h.algebra
    id_h = identity(field, (m,))

    def prod2(u, v):
        return tensor_elem_product(alg, 2, u, v)

    def prod3(u, v):
        return tensor_elem_product(alg, 3, u, v)

    cols = [prod2(f.f, prod2(h.comult.column(k), f.f_inverse)) for k in range(m)]
    comult_f = LinMap(
        field,
        (m,),
        (m, m),
        tuple(tuple(cols[k][i] for k in range(m)) for i in range(m * m)),
    )

    phi_f = prod3(
        kron_vec(field, alg.unit, f.f),
        prod3(
            apply(tensor_map(id_h, h.comult), f.f),
            prod3(
                h.associator,
                prod3(
                    apply(tensor_map(h.comult, id_h), f.f_inverse),
                    kron_vec(field, f.f_inverse, alg.unit),
                ),
            ),
        ),
    )
    phi_f_inv = prod3(
        kron_vec(field, f.f, alg.unit),
        prod3(
            apply(tensor_map(h.comult, id_h), f.f),
            prod3(
                h.associator_inverse,
                prod3(
                    apply(tensor_map(id_h, h.comult), f.f_inverse),
                    kron_vec(field, alg.unit, f.f_inverse),
                ),
            ),
        ),
    )

    twisted = QuasiBialgebra(
        algebra=alg,
        comult=comult_f,
        counit=h.counit,
        associator=phi_f,
        associator_inverse=phi_f_inv,
        label=h.label,
    )
    violations = quasi_bialgebra_violations(twisted)
    if violations:
        raise TheoremViolationError(f"twisted quasi-bialgebra fails {violations[0]}")
    return twisted


def module_algebra_twist(
    h: QuasiBialgebra, b: RightModuleAlgebra, f: GaugeTransformation
) -> RightModuleAlgebra:
    """Deformed multiplication b * b' = (b . F1)(b' . F2); unit and action kept."""
    _require_valid(module_algebra_violations(h, b), "module algebra")
    _require_valid(gauge_violations(h, f), "gauge transformation")
    field = h.field
    m, nb = h.algebra.dim, b.dim
    zero = field.zero()
    star = MapBuilder(field, (nb, nb), (nb,))
    for flat, coeff in enumerate(f.f):
        if coeff == zero:
            continue
        p, q = flat // m, flat % m
        for j in range(nb):
            col1 = tuple(b.action.matrix[x][j * m + p] for x in range(nb))
            for el in range(nb):
                col2 = tuple(b.action.matrix[y][el * m + q] for y in range(nb))
                for x in range(nb):
                    if col1[x] == zero:
                        continue
                    for y in range(nb):
                        if col2[y] == zero:
                            continue
                        c = field.mul(coeff, field.mul(col1[x], col2[y]))
                        prod = b.mult.column(x * nb + y)
                        for u in range(nb):
                            if prod[u] != zero:
                                star.add(u, j * nb + el, field.mul(c, prod[u]))
    twisted = RightModuleAlgebra(
        dim=nb,
        mult=star.build(),
        unit=b.unit,
        action=b.action,
        label=b.label,
    )
    violations = module_algebra_violations(drinfeld_twist(h, f), twisted)
    if violations:
        raise TheoremViolationError(f"twisted module algebra fails {violations[0]}")
    return twisted


def gauge_twist_pair(b: RightModuleAlgebra, f: GaugeTransformation) -> TwistPair:
    """theta(b) = F1 (x) b . F2 and gamma(b) = G1 (x) b . G2."""
    field = b.field
    m, nb = b.acting_dim, b.dim
    if len(f.f) != m * m:
        raise ShapeError(f"gauge element length {len(f.f)} does not match H dimension {m}")
    zero = field.zero()
    maps = []
    for elem in (f.f, f.f_inverse):
        builder = MapBuilder(field, (nb,), (m, nb))
        for flat, coeff in enumerate(elem):
            if coeff == zero:
                continue
            p, q = flat // m, flat % m
            for j in range(nb):
                for u in range(nb):
                    act = b.action.matrix[u][j * m + q]
                    if act != zero:
                        builder.add(p * nb + u, j, field.mul(coeff, act))
        maps.append(builder.build())
    return TwistPair(theta=maps[0], gamma=maps[1])


def group_like_bialgebra(alg: Algebra, label: str = "") -> QuasiBialgebra:
    """Group algebra viewed as a quasi-bialgebra with trivial associator."""
    field = alg.field
    m = alg.dim
    one, zero = field.one(), field.zero()
    comult_rows = []
    for i in range(m):
        for j in range(m):
            comult_rows.append(tuple(one if (i == k == j) else zero for k in range(m)))
    comult = LinMap(field, (m,), (m, m), tuple(comult_rows))
    counit = LinMap(field, (m,), (1,), ((one,) * m,))
    unit3 = kron_vec(field, kron_vec(field, alg.unit, alg.unit), alg.unit)
    return QuasiBialgebra(
        algebra=alg,
        comult=comult,
        counit=counit,
        associator=unit3,
        associator_inverse=unit3,
        label=label or alg.label,
    )


@dataclass(frozen=True)
class CorpusInstance:
    """A named, ready-to-verify bundle of crossed data and twisting inputs."""

    name: str
    tags: tuple[str, ...]
    description: str
    data: CrossedData
    pair: TwistPair | None = None
    twisting: TwistingMapData | None = None
    star: LinMap | None = None
    quasi: QuasiBialgebra | None = None
    module_algebra: RightModuleAlgebra | None = None
    gauge: GaugeTransformation | None = None


C2_TABLE = ((0, 1), (1, 0))
V4_TABLE = tuple(tuple(i ^ j for j in range(4)) for i in range(4))


def _sign_action(field: Field, b: Algebra, h_dim: int, sign_of: Sequence[int]) -> RightModuleAlgebra:
    """k[C2] acted on by a group: element q fixes e and scales u by sign_of[q]."""
    one, zero = field.one(), field.zero()
    builder = MapBuilder(field, (2, h_dim), (2,))
    for q in range(h_dim):
        builder.add(0, 0 * h_dim + q, one)
        sign = one if sign_of[q] == 1 else field.neg(one)
        builder.add(1, 1 * h_dim + q, sign)
    return RightModuleAlgebra(
        dim=2, mult=b.mult, unit=b.unit, action=builder.build(), label="kC2-signed"
    )


def _gauge_c2(field: Field) -> GaugeTransformation:
    half = field.from_fraction(Fraction(1, 2))
    neg_half = field.neg(half)
    elem = (half, half, half, neg_half)
    return GaugeTransformation(f=elem, f_inverse=elem)


def _gauge_v4(field: Field) -> GaugeTransformation:
    # Fourier coefficient -1 exactly at the character pair (2, 2) of C2 x C2;
    # its coboundary associator stays visible to an action through character 2.
    # Group-basis coordinates come out with denominator 16.
    coords = []
    for g in range(4):
        for hh in range(4):
            total = 0
            for s in range(4):
                for t in range(4):
                    sign = -1 if s == 2 and t == 2 else 1
                    chi_s = -1 if bin(s & g).count("1") % 2 else 1
                    chi_t = -1 if bin(t & hh).count("1") % 2 else 1
                    total += sign * chi_s * chi_t
            coords.append(field.from_fraction(Fraction(total, 16)))
    elem = tuple(coords)
    return GaugeTransformation(f=elem, f_inverse=elem)


def builtin_corpus(field: Field | None = None) -> tuple[CorpusInstance, ...]:
    """The deterministic list of bundled instances, smallest first."""
    field = field if field is not None else Rationals()

    kc2_a = algebra_from_group(C2_TABLE, 0, field, label="kC2")
    kc2_b = algebra_from_group(C2_TABLE, 0, field, label="kC2")
    kv4 = algebra_from_group(V4_TABLE, 0, field, label="kV4")

    instances: list[CorpusInstance] = []

    flip_twisting = TwistingMapData(a=kc2_a, b=kc2_b, r=flip(field, 2, 2))
    flip_data = twisted_tensor_product(flip_twisting)
    instances.append(
        CorpusInstance(
            name="ttp-flip-c2",
            tags=("crossed-axioms", "twisted-tensor-product", "trivial-twist"),
            description="ordinary tensor product kC2 (x) kC2 via the flip map",
            data=flip_data,
            pair=trivial_pair(flip_data.a, flip_data.v),
            twisting=flip_twisting,
            star=kc2_b.mult,
        )
    )

    h2 = group_like_bialgebra(kc2_a, label="kC2")
    b2 = _sign_action(field, kc2_b, 2, sign_of=(1, -1))
    smash2 = smash_product_data(h2, b2)
    instances.append(
        CorpusInstance(
            name="smash-sign-c2",
            tags=("crossed-axioms", "smash-product"),
            description="kC2 acting on kC2 by the sign automorphism",
            data=smash2,
            quasi=h2,
            module_algebra=b2,
        )
    )

    gauge2 = _gauge_c2(field)
    instances.append(
        CorpusInstance(
            name="gauge-c2",
            tags=("crossed-axioms", "twist", "gauge", "smash-product"),
            description="the sign-action smash product with its half-sum gauge pair",
            data=smash2,
            pair=gauge_twist_pair(b2, gauge2),
            quasi=h2,
            module_algebra=b2,
            gauge=gauge2,
        )
    )

    ttp_twisting = TwistingMapData(a=kc2_a, b=kc2_b, r=smash2.r)
    instances.append(
        CorpusInstance(
            name="ttp-star-c2",
            tags=("twisted-tensor-product", "twist", "deformed-star"),
            description="the sign-action twisted tensor product with the gauge-deformed star product",
            data=twisted_tensor_product(ttp_twisting),
            pair=gauge_twist_pair(b2, gauge2),
            twisting=ttp_twisting,
            star=module_algebra_twist(h2, b2, gauge2).mult,
            quasi=h2,
            module_algebra=b2,
            gauge=gauge2,
        )
    )

    h4 = group_like_bialgebra(kv4, label="kV4")
    b4 = _sign_action(field, kc2_b, 4, sign_of=(1, 1, -1, -1))
    gauge4 = _gauge_v4(field)
    smash4 = smash_product_data(h4, b4)
    instances.append(
        CorpusInstance(
            name="gauge-v4",
            tags=("crossed-axioms", "twist", "gauge", "smash-product", "dim-4x2"),
            description="kV4 acting on kC2 with a gauge whose twist has a nontrivial associator",
            data=smash4,
            pair=gauge_twist_pair(b4, gauge4),
            quasi=h4,
            module_algebra=b4,
            gauge=gauge4,
        )
    )

    h4f = drinfeld_twist(h4, gauge4)
    b4f = module_algebra_twist(h4, b4, gauge4)
    gauge4_back = GaugeTransformation(f=gauge4.f_inverse, f_inverse=gauge4.f)
    instances.append(
        CorpusInstance(
            name="smash-v4-twisted",
            tags=("crossed-axioms", "twist", "gauge", "nontrivial-associator"),
            description="smash product over the twisted kV4, associator nontrivial, gauge pointing back",
            data=smash_product_data(h4f, b4f),
            pair=gauge_twist_pair(b4f, gauge4_back),
            quasi=h4f,
            module_algebra=b4f,
            gauge=gauge4_back,
        )
    )

    return tuple(instances)
