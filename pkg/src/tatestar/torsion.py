"""The p-torsion group (Z/p)^2 with its symplectic pairing.

Points are written a*P + b*Q for a fixed ordered basis (P, Q).  The pairing
is normalized so that e(Q, P) = zeta, i.e. e(S, T) = zeta^(b_S*a_T - a_S*b_T),
which is bilinear, alternating and non-degenerate.  eps denotes the square
root e^((p+1)/2) of the pairing, the twist used by the star product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import AmbientMismatchError

DEFAULT_MAX_PRIME = 13

_checked_primes: set[int] = set()


def validate_odd_prime(p: int, max_value: int = DEFAULT_MAX_PRIME) -> int:
    """Check that p is an odd prime within the size guard and return it."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"p must be an integer, got {p!r}")
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    if any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise ValueError(f"p must be prime, got {p}")
    if p > max_value:
        raise ValueError(
            f"p={p} exceeds the guard bound {max_value}; "
            "expansions grow like p^p and are not practical beyond it"
        )
    return p


@dataclass(frozen=True)
class TorsionPoint:
    """The point a*P + b*Q, coordinates reduced mod p."""

    p: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.p not in _checked_primes:
            validate_odd_prime(self.p)
            _checked_primes.add(self.p)
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)

    @classmethod
    def zero(cls, p: int) -> TorsionPoint:
        return cls(p, 0, 0)

    @classmethod
    def parse(cls, text: str, p: int) -> TorsionPoint:
        """Parse the "a,b" serialization used on the command line."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected a point as 'a,b', got {text!r}")
        try:
            a, b = (int(part.strip()) for part in parts)
        except ValueError:
            raise ValueError(f"expected integer coordinates in {text!r}") from None
        return cls(p, a, b)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def coords(self) -> tuple[int, int]:
        return (self.a, self.b)

    def _require_same_ambient(self, other: TorsionPoint) -> None:
        if self.p != other.p:
            raise AmbientMismatchError(
                f"points over different primes: {self.p} vs {other.p}"
            )

    def __add__(self, other: TorsionPoint) -> TorsionPoint:
        self._require_same_ambient(other)
        return TorsionPoint(self.p, self.a + other.a, self.b + other.b)

    def __sub__(self, other: TorsionPoint) -> TorsionPoint:
        self._require_same_ambient(other)
        return TorsionPoint(self.p, self.a - other.a, self.b - other.b)

    def __neg__(self) -> TorsionPoint:
        return TorsionPoint(self.p, -self.a, -self.b)

    def __mul__(self, n: int) -> TorsionPoint:
        if not isinstance(n, int):
            return NotImplemented
        return TorsionPoint(self.p, n * self.a, n * self.b)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


@dataclass(frozen=True)
class RootOfUnity:
    """The formal p-th root of unity zeta^exponent."""

    p: int
    exponent: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", self.exponent % self.p)

    @classmethod
    def one(cls, p: int) -> RootOfUnity:
        return cls(p, 0)

    @property
    def is_one(self) -> bool:
        return self.exponent == 0

    def _require_same_ambient(self, other: RootOfUnity) -> None:
        if self.p != other.p:
            raise AmbientMismatchError(
                f"roots of unity over different primes: {self.p} vs {other.p}"
            )

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        self._require_same_ambient(other)
        return RootOfUnity(self.p, self.exponent + other.exponent)

    def __pow__(self, n: int) -> RootOfUnity:
        return RootOfUnity(self.p, self.exponent * n)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(self.p, -self.exponent)

    def __str__(self) -> str:
        if self.exponent == 0:
            return "1"
        if self.exponent == 1:
            return "zeta"
        return f"zeta^{self.exponent}"


def basis(p: int) -> tuple[TorsionPoint, TorsionPoint]:
    """The standard ordered basis (P, Q) = ((1,0), (0,1))."""
    return TorsionPoint(p, 1, 0), TorsionPoint(p, 0, 1)


def generates(P: TorsionPoint, Q: TorsionPoint) -> bool:
    """Whether (P, Q) is a basis of the full group."""
    P._require_same_ambient(Q)
    return (P.a * Q.b - P.b * Q.a) % P.p != 0


def weil_exponent(S: TorsionPoint, T: TorsionPoint) -> int:
    """Exponent k with e(S, T) = zeta^k under the e(Q, P) = zeta convention."""
    S._require_same_ambient(T)
    return (S.b * T.a - S.a * T.b) % S.p


def weil(S: TorsionPoint, T: TorsionPoint) -> RootOfUnity:
    """The pairing e(S, T)."""
    return RootOfUnity(S.p, weil_exponent(S, T))


def epsilon_exponent(S: TorsionPoint, T: TorsionPoint) -> int:
    """Exponent of eps(S, T) = e(S, T)^((p+1)/2), the square root of e(S, T)."""
    p = S.p
    return ((p + 1) // 2) * weil_exponent(S, T) % p


def epsilon(S: TorsionPoint, T: TorsionPoint) -> RootOfUnity:
    """The twist eps(S, T); satisfies eps(S, T)^2 = e(S, T)."""
    return RootOfUnity(S.p, epsilon_exponent(S, T))


def all_points(p: int) -> Iterator[TorsionPoint]:
    """All p^2 points, in lexicographic (a, b) order."""
    for a in range(p):
        for b in range(p):
            yield TorsionPoint(p, a, b)


def nonzero_points(p: int) -> Iterator[TorsionPoint]:
    for point in all_points(p):
        if not point.is_zero:
            yield point


def w_map(S: TorsionPoint) -> dict[TorsionPoint, RootOfUnity]:
    """The character T -> e(S, T) as an explicit table on all points."""
    return {T: weil(S, T) for T in all_points(S.p)}


def index_shift(T: TorsionPoint) -> TorsionPoint:
    """The substitution P -> P, Q -> Q + P extended additively."""
    return TorsionPoint(T.p, T.a + T.b, T.b)
