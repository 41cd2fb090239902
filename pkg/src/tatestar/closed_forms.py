"""Closed-form expansions of the p-th star power of the line element.

The line element through a basis (P, Q) is Delta = sum_i delta_{Q+iP}.  Its
p-th twisted power is supported on multiples of P, and three equivalent
expansions of it are provided:

  * gamma_form: the origin coefficient as a sum over index tuples that are
    balanced mod p, weighted by powers of e(Q, P) and products of gamma values;
  * intermediate_form: the full element as a sum over all p^p index tuples,
    weighted by powers of eps(Q, P);
  * rho_form: the origin coefficient written purely in terms of the twist rho,
    as accumulated by the left-associated product of p indicator factors.

All enumeration is done with an odometer over the first p-1 indices; the last
index is forced (gamma/rho forms) or varied in the cheap innermost loop
(intermediate form).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import BasisError
from .laurent import LaurentPoly, Monomial
from .star_algebra import AlgebraElement, Domain, GammaAssignment, RhoAssignment
from .torsion import TorsionPoint, generates, nonzero_points, weil_exponent


@dataclass(frozen=True)
class ClosedFormResult:
    """One expansion: the full algebra element plus its origin coefficient."""

    form: str
    element: AlgebraElement

    @property
    def o_coefficient(self):
        origin = TorsionPoint.zero(self.element.domain.p)
        return self.element.coefficient(origin)


def _require_basis(P: TorsionPoint, Q: TorsionPoint) -> None:
    if not generates(P, Q):
        raise BasisError(f"({P}) and ({Q}) do not generate the p-torsion group")


def build_delta(domain: Domain, P: TorsionPoint, Q: TorsionPoint) -> AlgebraElement:
    """The line element sum_i delta_{Q+iP} with unit coefficients."""
    _require_basis(P, Q)
    one = domain.one()
    return AlgebraElement(domain, [(Q + i * P, one) for i in range(domain.p)])


def gamma_form(P: TorsionPoint, Q: TorsionPoint, gamma: GammaAssignment) -> ClosedFormResult:
    """Origin coefficient of Delta^{*p} from gamma data on the coset Q + <P>.

    Sums e(Q,P)^(sum l*i_l) * prod_l gamma(Q + i_l P) over tuples
    (i_1, ..., i_p) in [0,p)^p whose entries are balanced (sum = 0 mod p).
    """
    domain = gamma.domain
    p = domain.p
    _require_basis(P, Q)
    d = weil_exponent(Q, P)
    gvals = [gamma.value(Q + i * P) for i in range(p)]
    roots = [domain.root(k) for k in range(p)]
    mul = domain.mul
    acc = domain.accumulator()
    for head in product(range(p), repeat=p - 1):
        total = 0
        weight = 0
        term = None
        for offset, i in enumerate(head):
            total += i
            weight += (offset + 1) * i
            term = gvals[i] if term is None else mul(term, gvals[i])
        term = mul(term, gvals[-total % p])
        acc.add(mul(roots[d * weight % p], term))
    origin = TorsionPoint.zero(p)
    return ClosedFormResult("gamma", AlgebraElement(domain, [(origin, acc.value())]))


def intermediate_form(
    P: TorsionPoint, Q: TorsionPoint, gamma: GammaAssignment
) -> ClosedFormResult:
    """Full expansion of Delta^{*p} over all p^p index tuples.

    The tuple (i_1, ..., i_p) contributes at the support point (sum i_l) P
    with weight eps(Q,P)^(sum (2l-1) i_l) and coefficient
    prod_l gamma(Q + i_l P) / gamma((sum i_l) P).
    """
    domain = gamma.domain
    p = domain.p
    _require_basis(P, Q)
    half = (p + 1) // 2
    d = weil_exponent(Q, P)
    gvals = [gamma.value(Q + i * P) for i in range(p)]
    inv_on_line = [domain.inv(gamma.value(s * P)) for s in range(p)]
    roots = [domain.root(k) for k in range(p)]
    mul = domain.mul
    accs = [domain.accumulator() for _ in range(p)]
    last_weight = (2 * p - 1) * half * d
    for head in product(range(p), repeat=p - 1):
        total = 0
        weight = 0
        term = None
        for offset, i in enumerate(head):
            total += i
            weight += (2 * (offset + 1) - 1) * i
            term = gvals[i] if term is None else mul(term, gvals[i])
        weight *= half * d
        for last in range(p):
            s = (total + last) % p
            coeff = mul(roots[(weight + last_weight * last) % p],
                        mul(mul(term, gvals[last]), inv_on_line[s]))
            accs[s].add(coeff)
    support = [(s * P, accs[s].value()) for s in range(p)]
    return ClosedFormResult("intermediate", AlgebraElement(domain, support))


def rho_form(P: TorsionPoint, Q: TorsionPoint, rho: RhoAssignment) -> ClosedFormResult:
    """Origin coefficient of Delta^{*p} written purely in terms of rho.

    Follows the left-associated product of the p indicator factors: the
    balanced tuple (i_1, ..., i_p) contributes e(Q,P)^(sum l*i_l) times
    prod_{j=1}^{p-1} rho(jQ + (i_1+...+i_j)P, Q + i_{j+1}P).
    """
    domain = rho.domain
    p = domain.p
    _require_basis(P, Q)
    d = weil_exponent(Q, P)
    coset = [Q + i * P for i in range(p)]
    partial = [[j * Q + s * P for s in range(p)] for j in range(p)]
    roots = [domain.root(k) for k in range(p)]
    mul = domain.mul
    acc = domain.accumulator()
    for head in product(range(p), repeat=p - 1):
        tail = -sum(head) % p
        full = head + (tail,)
        weight = sum((offset + 1) * i for offset, i in enumerate(head))
        running = 0
        term = None
        for j in range(1, p):
            running = (running + full[j - 1]) % p
            factor = rho.value(partial[j][running], coset[full[j]])
            term = factor if term is None else mul(term, factor)
        acc.add(mul(roots[d * weight % p], term))
    origin = TorsionPoint.zero(p)
    return ClosedFormResult("rho", AlgebraElement(domain, [(origin, acc.value())]))


@dataclass(frozen=True)
class SpecializationReport:
    """Image of the gamma form under g_T -> x^a y^b, against its product shape."""

    specialized: LaurentPoly
    expected: LaurentPoly

    @property
    def agrees(self) -> bool:
        return self.specialized == self.expected


def multiplicative_specialization(p: int) -> SpecializationReport:
    """Substitute g_{aP+bQ} -> x^a y^b into the gamma form for the standard basis.

    The image collapses to y^p (1 - x^p)^(p-1).
    """
    P = TorsionPoint(p, 1, 0)
    Q = TorsionPoint(p, 0, 1)
    gamma = GammaAssignment.symbolic(p)
    result = gamma_form(P, Q, gamma)
    mapping = {T: Monomial([("x", T.a), ("y", T.b)]) for T in nonzero_points(p)}
    specialized = result.o_coefficient.substitute(mapping)
    x = LaurentPoly.variable(p, "x")
    y = LaurentPoly.variable(p, "y")
    expected = (y ** p) * ((LaurentPoly.one(p) - x ** p) ** (p - 1))
    return SpecializationReport(specialized, expected)
