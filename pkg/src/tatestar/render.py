"""JSON payloads and LaTeX strings for the command-line output."""

from __future__ import annotations

from fractions import Fraction

from .closed_forms import ClosedFormResult
from .cyclotomic import CycNumber
from .laurent import LaurentPoly, Monomial
from .local_pairing import PairingValue, TameFieldModel
from .star_algebra import AlgebraElement
from .torsion import TorsionPoint

CONVENTION = "e(Q,P)=zeta"


def point_label(point: TorsionPoint) -> str:
    """Readable name of a*P + b*Q, e.g. "O", "P", "Q+2P", "2Q"."""
    parts = []
    if point.b:
        parts.append("Q" if point.b == 1 else f"{point.b}Q")
    if point.a:
        parts.append("P" if point.a == 1 else f"{point.a}P")
    return "+".join(parts) if parts else "O"


def _frac_latex(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    sign = "-" if f < 0 else ""
    return f"{sign}\\tfrac{{{abs(f.numerator)}}}{{{f.denominator}}}"


def cyc_latex(c: CycNumber) -> str:
    """A cyclotomic number as a LaTeX sum of powers of zeta."""
    parts = []
    for e, f in enumerate(c.to_fractions()):
        if f == 0:
            continue
        unit = "" if e == 0 else ("\\zeta" if e == 1 else f"\\zeta^{{{e}}}")
        if not unit:
            body = _frac_latex(f)
        elif f == 1:
            body = unit
        elif f == -1:
            body = f"-{unit}"
        else:
            body = f"{_frac_latex(f)}{unit}"
        parts.append(body)
    if not parts:
        return "0"
    out = parts[0]
    for part in parts[1:]:
        out += f" {part}" if part.startswith("-") else f" + {part}"
    return out


def monomial_latex(mono: Monomial) -> str:
    if mono.is_one:
        return "1"
    bits = []
    for var, exp in mono.pairs:
        name = f"g_{{{point_label(var)}}}" if isinstance(var, TorsionPoint) else str(var)
        bits.append(name if exp == 1 else f"{name}^{{{exp}}}")
    return " ".join(bits)


def poly_latex(poly: LaurentPoly) -> str:
    terms = poly.terms()
    if not terms:
        return "0"
    bits = []
    for mono, coeff in terms:
        c = cyc_latex(coeff)
        m = monomial_latex(mono)
        if m == "1":
            bits.append(c)
        elif c == "1":
            bits.append(m)
        elif c == "-1":
            bits.append(f"-{m}")
        else:
            wrapped = c if ("+" not in c and " - " not in c) else f"\\left({c}\\right)"
            bits.append(f"{wrapped}\\, {m}")
    out = bits[0]
    for bit in bits[1:]:
        out += f" {bit}" if bit.startswith("-") else f" + {bit}"
    return out


def element_latex(element: AlgebraElement) -> str:
    items = element.items()
    if not items:
        return "0"
    bits = []
    for point, coeff in items:
        if isinstance(coeff, LaurentPoly):
            body = poly_latex(coeff)
        else:
            body = str(coeff)
        bits.append(f"\\left({body}\\right) \\delta_{{{point_label(point)}}}")
    return " + ".join(bits)


def expand_payload(p: int, form: str, result: ClosedFormResult) -> dict:
    payload: dict = {"p": p, "form": form, "convention": CONVENTION}
    if form == "intermediate":
        payload["element"] = result.element.to_json()
    else:
        payload["terms"] = result.o_coefficient.to_json()
    return payload


def model_payload(model: TameFieldModel) -> dict:
    return {"p": model.p, "q": model.q, "g": model.g, "zeta": model.zeta}


def pair_payload(model: TameFieldModel, value: PairingValue) -> dict:
    return {"value": str(value), "model": model_payload(model), "convention": CONVENTION}


def hilbert_payload(model: TameFieldModel, value: PairingValue) -> dict:
    return {"value": str(value), "model": model_payload(model)}
