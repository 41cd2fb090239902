"""Tame local field model and the explicit Hilbert-symbol pairing.

The model is the field K with residue characteristic q, q prime and
q = 1 mod p, truncated to the data that the degree-p symbol can see:
an element is pi^n * [u] for a formal uniformizer pi and a Teichmuller
unit [u], u in F_q^x.  The symbol of two such elements is computed by
the tame formula

    ((-1)^(v(a)v(b)) * u_a^(v(b)) * u_b^(-v(a))) ^ ((q-1)/p)

which lands in the group of p-th roots of unity of F_q; taking the
discrete log against the distinguished root zeta = g^((q-1)/p) turns it
into a value in (1/p)Z / Z, printed as "k/p".
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbientMismatchError
from .modular import discrete_log, is_prime, prime_factors, primitive_root, smallest_split_prime
from .torsion import validate_odd_prime


@dataclass(frozen=True)
class TameFieldModel:
    """Parameters (p, q, g, zeta) of the tame model; build with create()."""

    p: int
    q: int
    g: int
    zeta: int

    @classmethod
    def create(cls, p: int, q: int | None = None, g: int | None = None) -> TameFieldModel:
        validate_odd_prime(p)
        if q is None:
            q = smallest_split_prime(p)
        if not is_prime(q):
            raise ValueError(f"q must be prime, got {q}")
        if q % p != 1:
            raise ValueError(f"q must be 1 mod p so the residue field has p-th roots; got q={q}")
        if g is None:
            g = primitive_root(q)
        else:
            g %= q
            if g == 0 or not all(pow(g, (q - 1) // f, q) != 1 for f in prime_factors(q - 1)):
                raise ValueError(f"g={g} is not a primitive root mod {q}")
        zeta = pow(g, (q - 1) // p, q)
        return cls(p, q, g, zeta)

    def element(self, val: int, unit: int) -> TameElement:
        return TameElement(self, val, unit)

    def parse(self, text: str) -> TameElement:
        """Parse the "n:u" form: valuation n, Teichmuller unit u."""
        parts = text.split(":")
        if len(parts) != 2:
            raise ValueError(f"expected an element as 'n:u', got {text!r}")
        try:
            val, unit = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"expected integers in {text!r}") from None
        return TameElement(self, val, unit)

    def one(self) -> TameElement:
        return TameElement(self, 0, 1)

    def uniformizer(self) -> TameElement:
        return TameElement(self, 1, 1)


@dataclass(frozen=True)
class TameElement:
    """pi^val * [unit] in the tame model."""

    model: TameFieldModel
    val: int
    unit: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "unit", self.unit % self.model.q)
        if self.unit == 0:
            raise ValueError("the unit part must be nonzero mod q")

    def _require_same_model(self, other: TameElement) -> None:
        if self.model != other.model:
            raise AmbientMismatchError("elements of different tame models")

    def __mul__(self, other: TameElement) -> TameElement:
        if not isinstance(other, TameElement):
            return NotImplemented
        self._require_same_model(other)
        q = self.model.q
        return TameElement(self.model, self.val + other.val, self.unit * other.unit % q)

    def __pow__(self, n: int) -> TameElement:
        return TameElement(self.model, self.val * n, pow(self.unit, n, self.model.q))

    def inverse(self) -> TameElement:
        return self ** -1

    def class_vector(self) -> tuple[int, int]:
        """Coordinates of the class in K^x/(K^x)^p on the basis (pi, [g])."""
        p, q, g = self.model.p, self.model.q, self.model.g
        return (self.val % p, discrete_log(g, self.unit, q, q - 1) % p)

    def __str__(self) -> str:
        return f"{self.val}:{self.unit}"


class ZeroSignal:
    """Marker returned by one_minus when the difference is exactly zero."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"


ZERO = ZeroSignal()


@dataclass(frozen=True)
class PairingValue:
    """An element k/p of (1/p)Z / Z."""

    p: int
    numerator: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", self.numerator % self.p)

    @classmethod
    def zero(cls, p: int) -> PairingValue:
        return cls(p, 0)

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0

    def _require_same_ambient(self, other: PairingValue) -> None:
        if self.p != other.p:
            raise AmbientMismatchError(f"values over different primes: {self.p} vs {other.p}")

    def __add__(self, other: PairingValue) -> PairingValue:
        if not isinstance(other, PairingValue):
            return NotImplemented
        self._require_same_ambient(other)
        return PairingValue(self.p, self.numerator + other.numerator)

    def __neg__(self) -> PairingValue:
        return PairingValue(self.p, -self.numerator)

    def __sub__(self, other: PairingValue) -> PairingValue:
        if not isinstance(other, PairingValue):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n: int) -> PairingValue:
        if not isinstance(n, int):
            return NotImplemented
        return PairingValue(self.p, self.numerator * n)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "0" if self.numerator == 0 else f"{self.numerator}/{self.p}"


def hilbert(a: TameElement, b: TameElement) -> PairingValue:
    """The degree-p tame symbol of a and b, as a value in (1/p)Z / Z."""
    a._require_same_model(b)
    model = a.model
    p, q = model.p, model.q
    sign = -1 if (a.val * b.val) % 2 else 1
    h0 = sign * pow(a.unit, b.val, q) * pow(b.unit, -a.val, q) % q
    h = pow(h0, (q - 1) // p, q)
    return PairingValue(p, discrete_log(model.zeta, h, q, p))


def one_minus(a: TameElement) -> TameElement | ZeroSignal:
    """The image of 1 - a back in the tame model (or ZERO when a = 1).

    Only the class modulo p-th powers matters downstream, and 1-units are
    p-th powers in the tame setting, so it is enough to keep the leading
    term: for v(a) > 0 this is 1, for v(a) < 0 it is -a, for v(a) = 0 it
    is the residue difference 1 - u.
    """
    model = a.model
    if a.val > 0:
        return model.one()
    if a.val < 0:
        return TameElement(model, a.val, -a.unit)
    if a.unit == 1:
        return ZERO
    return TameElement(model, 0, 1 - a.unit)


def iota(model: TameFieldModel, z: int) -> PairingValue:
    """Identify a p-th root of unity of F_q with its value k/p."""
    z %= model.q
    if z == 0 or pow(z, model.p, model.q) != 1:
        raise ValueError(f"{z} is not a p-th root of unity mod {model.q}")
    return PairingValue(model.p, discrete_log(model.zeta, z, model.q, model.p))


def qk_split(alpha_p: TameElement, alpha_q: TameElement) -> PairingValue:
    """The split-reduction pairing value {alpha_P, alpha_Q (1 - alpha_P)^(p-1)}."""
    alpha_p._require_same_model(alpha_q)
    p = alpha_p.model.p
    remainder = one_minus(alpha_p)
    if isinstance(remainder, ZeroSignal):
        # alpha_P = 1 is a p-th power, so every symbol against it vanishes
        return PairingValue.zero(p)
    return hilbert(alpha_p, alpha_q * remainder ** (p - 1))


def unramified_scaling(a: TameElement, b: TameElement, d: int) -> PairingValue:
    """The symbol of a and b over the unramified extension of degree d.

    The residue field grows to q^d elements, so the tame exponent becomes
    (q^d - 1)/p; on units of the base field this acts as the d-th power of
    the base exponent, giving d times the base symbol.
    """
    if d < 1:
        raise ValueError(f"extension degree must be positive, got {d}")
    a._require_same_model(b)
    model = a.model
    p, q = model.p, model.q
    sign = -1 if (a.val * b.val) % 2 else 1
    h0 = sign * pow(a.unit, b.val, q) * pow(b.unit, -a.val, q) % q
    h = pow(h0, (q ** d - 1) // p, q)
    return PairingValue(p, discrete_log(model.zeta, h, q, p))


def is_norm_from(b: TameElement, a: TameElement) -> bool:
    """Whether b is a norm from K(a^(1/p)), decided on classes mod p-th powers.

    The norm group contains all p-th powers and the element a itself; when
    the extension is trivial (a already a p-th power) everything is a norm,
    and otherwise the norm group has index p, so it is exactly the span of
    class(a) over the p-th powers.
    """
    b._require_same_model(a)
    p = a.model.p
    u = a.class_vector()
    if u == (0, 0):
        return True
    w = b.class_vector()
    return any(((t * u[0] - w[0]) % p, (t * u[1] - w[1]) % p) == (0, 0) for t in range(p))


def class_representatives(model: TameFieldModel) -> list[TameElement]:
    """One element pi^i [g^j] for each of the p^2 classes of K^x/(K^x)^p."""
    return [
        TameElement(model, i, pow(model.g, j, model.q))
        for i in range(model.p)
        for j in range(model.p)
    ]
