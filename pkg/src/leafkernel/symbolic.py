"""Exact polynomial arithmetic for certifying the sleaf_3 / cleaf_3 identities.

Polynomials live over the rationals in the generators ``s1, s2, d1, d2, x``.
``d_i`` stands for the derivative sleaf_3'(l_i), a square root obeying

    d_i^2 = 1 - s_i^6,

so every polynomial is kept in a canonical form where d1 and d2 appear to
power 0 or 1 only.  Identities between expressions involving the radicals
then reduce to comparing canonical forms; two expressions are equal exactly
when their difference is the zero polynomial.

Differentiation along l_i is the derivation with s_i -> d_i and
d_i -> -3 s_i^5 (the ODE r'' = -3 r^5).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .errors import IdentityViolation

__all__ = [
    "GENERATORS",
    "RationalPoly",
    "IdentityCheck",
    "ProofReport",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "build_p",
    "expanded_partials",
    "verify_numerator_identity",
    "verify_double_angle_identity",
    "verify_first_term_reduction",
    "verify_pythagorean_double",
    "verify_all",
]

GENERATORS = ("s1", "s2", "d1", "d2", "x")
_INDEX = {name: i for i, name in enumerate(GENERATORS)}
# (d generator, paired s generator)
_RADICALS = ((_INDEX["d1"], _INDEX["s1"]), (_INDEX["d2"], _INDEX["s2"]))

Coefficient = Union[int, Fraction]


def _bump(exps, index, delta):
    out = list(exps)
    out[index] += delta
    return tuple(out)


def _canonical(raw):
    """Rewrite d_i^2 -> 1 - s_i^6 until every d exponent is 0 or 1."""
    out = {}
    stack = list(raw.items())
    while stack:
        exps, coeff = stack.pop()
        if coeff == 0:
            continue
        for d, s in _RADICALS:
            if exps[d] >= 2:
                lowered = _bump(exps, d, -2)
                stack.append((lowered, coeff))
                stack.append((_bump(lowered, s, 6), -coeff))
                break
        else:
            total = out.get(exps, 0) + coeff
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
    return out


class RationalPoly:
    """Sparse polynomial with exact rational coefficients in canonical form.

    >>> d1 = RationalPoly.gen("d1")
    >>> str(d1 * d1)
    '1 - s1^6'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Coefficient] = None):
        raw = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(GENERATORS) or min(exps) < 0:
                raise ValueError(f"bad exponent vector {exps}")
            raw[exps] = raw.get(exps, 0) + Fraction(coeff)
        self._terms = _canonical(raw)

    @classmethod
    def _from_canonical(cls, terms):
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def const(cls, value: Coefficient) -> "RationalPoly":
        return cls({(0,) * len(GENERATORS): value})

    @classmethod
    def gen(cls, name: str) -> "RationalPoly":
        return cls({_bump((0,) * len(GENERATORS), _INDEX[name], 1): 1})

    @classmethod
    def monomial(cls, coeff: Coefficient = 1, **powers: int) -> "RationalPoly":
        exps = [0] * len(GENERATORS)
        for name, p in powers.items():
            exps[_INDEX[name]] = p
        return cls({tuple(exps): coeff})

    @property
    def terms(self) -> dict:
        """Copy of the ``{exponent tuple: Fraction}`` map."""
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def normalize(self) -> "RationalPoly":
        return RationalPoly(self._terms)

    def degree(self, name: str) -> int:
        i = _INDEX[name]
        return max((exps[i] for exps in self._terms), default=0)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(GENERATORS), Fraction(0))

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exps, c in other._terms.items():
            total = out.get(exps, 0) + c
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
        return RationalPoly._from_canonical(out)

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly._from_canonical({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        raw = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                raw[exps] = raw.get(exps, 0) + c1 * c2
        return RationalPoly._from_canonical(_canonical(raw))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0 or int(k) != k:
            raise ValueError("only non-negative integer powers")
        result = RationalPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    __hash__ = None

    def derivative(self, name: str) -> "RationalPoly":
        """Formal partial derivative, treating every generator as independent.

        Only meaningful for polynomials free of d1, d2 (the rewrite rule
        ties d_i to s_i).
        """
        i = _INDEX[name]
        raw = {}
        for exps, c in self._terms.items():
            if exps[i]:
                key = _bump(exps, i, -1)
                raw[key] = raw.get(key, 0) + c * exps[i]
        return RationalPoly(raw)

    def leaf_derivative(self, which: int) -> "RationalPoly":
        """Derivative with respect to l_which (1 or 2)."""
        s_name, d_name = f"s{which}", f"d{which}"
        si, di = _INDEX[s_name], _INDEX[d_name]
        ds = RationalPoly.gen(d_name)
        dd = RationalPoly.monomial(-3, **{s_name: 5})
        total = RationalPoly()
        for exps, c in self._terms.items():
            for index, inner in ((si, ds), (di, dd)):
                if exps[index]:
                    rest = RationalPoly._from_canonical({_bump(exps, index, -1): c * exps[index]})
                    total = total + rest * inner
        return total

    def substitute(self, **values) -> "RationalPoly":
        """Replace generators by rationals or polynomials."""
        total = RationalPoly()
        for exps, c in self._terms.items():
            term = RationalPoly.const(c)
            keep = list(exps)
            for name, value in values.items():
                i = _INDEX[name]
                if exps[i]:
                    if isinstance(value, float):
                        value = Fraction(value)
                    term = term * self._coerce(value) ** exps[i]
                    keep[i] = 0
            total = total + term * RationalPoly({tuple(keep): 1})
        return total

    def evaluate(self, **values: float) -> float:
        """Floating-point value; every generator present must be given."""
        total = 0.0
        for exps, c in self._terms.items():
            term = float(c)
            for name, e in zip(GENERATORS, exps):
                if e:
                    term *= values[name] ** e
            total += term
        return total

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            c = self._terms[exps]
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(GENERATORS, exps) if e
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"RationalPoly({str(self)!r})"


def poly_add(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    return a + b


def poly_sub(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    return a - b


def poly_mul(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    return a * b


@dataclass
class IdentityCheck:
    """One identity lhs == rhs and its reduced difference."""

    label: str
    lhs: RationalPoly
    rhs: RationalPoly
    difference: RationalPoly = field(init=False)

    def __post_init__(self):
        self.difference = self.lhs - self.rhs

    @property
    def ok(self) -> bool:
        return self.difference.is_zero()

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"[{status}] {self.label}: residual {len(self.difference)} terms "
            f"(difference = {self.difference}; lhs {len(self.lhs)} terms, "
            f"rhs {len(self.rhs)} terms)"
        )


@dataclass
class ProofReport:
    title: str
    checks: list

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def to_text(self) -> str:
        lines = [self.title]
        lines.extend("  " + check.line() for check in self.checks)
        return "\n".join(lines)

    def surviving_monomials(self) -> dict:
        return {c.label: str(c.difference) for c in self.checks if not c.ok}

    def raise_if_failed(self) -> "ProofReport":
        if not self.ok:
            raise IdentityViolation(
                f"{self.title}: nonzero remainder {self.surviving_monomials()}", report=self
            )
        return self


s1 = RationalPoly.gen("s1")
s2 = RationalPoly.gen("s2")
d1 = RationalPoly.gen("d1")
d2 = RationalPoly.gen("d2")
x = RationalPoly.gen("x")


def build_p(i: int) -> RationalPoly:
    """The building blocks of the squared sleaf_3 addition formula.

    p1 = s1 d2 + s2 d1, p2 = s1^3 s2 - s1 s2^3, p3 = 1 + 4 s1^4 s2^2 + 4 s1^2 s2^4.
    """
    if i == 1:
        return s1 * d2 + s2 * d1
    if i == 2:
        return s1**3 * s2 - s1 * s2**3
    if i == 3:
        return 1 + 4 * s1**4 * s2**2 + 4 * s1**2 * s2**4
    raise ValueError(f"i must be 1, 2 or 3, got {i}")


def expanded_partials(which: int) -> tuple:
    """Hand expansions of d p1, d p2, d p3 along l_which (expanded lines).

    These are transcribed term by term, with the second derivative of sleaf_3
    already replaced by -3 s^5; :func:`verify_numerator_identity` checks them
    against the derivation before use.
    """
    if which == 1:
        return (
            d1 * d2 - 3 * s2 * s1**5,
            3 * s1**2 * s2 * d1 - s2**3 * d1,
            16 * s1**3 * s2**2 * d1 + 8 * s1 * s2**4 * d1,
        )
    if which == 2:
        return (
            d1 * d2 - 3 * s1 * s2**5,
            s1**3 * d2 - 3 * s2**2 * s1 * d2,
            16 * s2**3 * s1**2 * d2 + 8 * s2 * s1**4 * d2,
        )
    raise ValueError(f"which must be 1 or 2, got {which}")


def _numerator(which, partials):
    p1, p2, p3 = (build_p(i) for i in (1, 2, 3))
    dp1, dp2, dp3 = partials
    return (2 * p1 * dp1 + 2 * p2 * dp2) * p3 - (p1**2 + p2**2) * dp3


# the common expanded form of both derivative numerators
NUMERATOR_EXPANDED = (
    2 * s1 - 8 * s1**5 * s2**2 - 24 * s1**3 * s2**4 - 8 * s1 * s2**6 - 16 * s1**5 * s2**8
) * d1 + (
    2 * s2 - 8 * s1**2 * s2**5 - 24 * s1**4 * s2**3 - 8 * s1**6 * s2 - 16 * s1**8 * s2**5
) * d2


def verify_numerator_identity() -> ProofReport:
    """Show the l1- and l2-derivatives of g^2 p3^2 share one numerator.

    Equality of the two numerators is what makes dg/dl1 == dg/dl2, hence
    g(l1, l2) == g(l1 + l2, 0).
    """
    checks = []
    for which in (1, 2):
        hand = expanded_partials(which)
        for i, expansion in enumerate(hand, start=1):
            checks.append(
                IdentityCheck(
                    f"dp{i}/dl{which} expansion", expansion, build_p(i).leaf_derivative(which)
                )
            )
    n1 = _numerator(1, expanded_partials(1))
    n2 = _numerator(2, expanded_partials(2))
    checks.append(IdentityCheck("numerator d/dl1 == numerator d/dl2", n1, n2))
    checks.append(IdentityCheck("numerator d/dl1 == expanded form", n1, NUMERATOR_EXPANDED))
    checks.append(IdentityCheck("numerator d/dl2 == expanded form", n2, NUMERATOR_EXPANDED))
    return ProofReport("derivative numerator symmetry", checks)


def verify_double_angle_identity() -> ProofReport:
    """Polynomial facts behind the sleaf_3 double-angle formula.

    With x = r^6 for the half-angle value r:
      * 1 - (double-angle value)^6 is a perfect square,
        (1 + 8x)^3 - 64 x (1 - x)^3 = (1 - 20x - 8x^2)^2;
      * the derivative of the squared double-angle value
        4 r^2 (1 - r^6) / (1 + 8 r^6) has numerator 4 r (2 - 40 r^6 - 16 r^12),
        checked with denominators cleared (r is the generator s1);
      * 2 - 40x - 16x^2 = 2 (1 - 20x - 8x^2), the cancellation that leaves
        a factor 2 in the differential relation.
    """
    radicand = (1 + 8 * x) ** 3 - 64 * x * (1 - x) ** 3
    square = (1 - 20 * x - 8 * x**2) ** 2
    r = s1
    top = 4 * r**2 * (1 - r**6)
    bottom = 1 + 8 * r**6
    quotient_numerator = top.derivative("s1") * bottom - top * bottom.derivative("s1")
    claimed = 4 * r * (2 - 40 * r**6 - 16 * r**12)
    return ProofReport(
        "double-angle algebra",
        [
            IdentityCheck("(1+8x)^3 - 64x(1-x)^3 == (1-20x-8x^2)^2", radicand, square),
            IdentityCheck("quotient-rule numerator of r1^2", quotient_numerator, claimed),
            IdentityCheck(
                "2 - 40x - 16x^2 == 2(1 - 20x - 8x^2)",
                2 - 40 * x - 16 * x**2,
                2 * (1 - 20 * x - 8 * x**2),
            ),
        ],
    )


def verify_first_term_reduction() -> ProofReport:
    """p1 dp1/dl1 + p2 dp2/dl1 == (s1 - 4 s1^3 s2^4) d1 + (s2 - 4 s1^6 s2) d2."""
    p1, p2 = build_p(1), build_p(2)
    dp1, dp2, _ = expanded_partials(1)
    lhs = p1 * dp1 + p2 * dp2
    rhs = (s1 - 4 * s1**3 * s2**4) * d1 + (s2 - 4 * s1**6 * s2) * d2
    return ProofReport("first-term reduction", [IdentityCheck("p1*dp1 + p2*dp2", lhs, rhs)])


def double_angle_squares():
    """Squared double-angle values as fractions of polynomials in y = cleaf_3^2.

    Returns ``(a, A, b, B)`` with sleaf_3(2l)^2 = a / A and cleaf_3(2l)^2 = b / B,
    where sleaf_3(l)^2 has been eliminated through s^2 = (1 - y) / (1 + 2y).
    ``y`` is carried by the generator ``x``.
    """
    y = x
    u, w = 1 - y, 1 + 2 * y  # s^2 = u / w
    a = 4 * u * (w**3 - u**3)
    big_a = w * (w**3 + 8 * u**3)
    b = (2 * y + 2 * y**2 - 1) ** 2
    big_b = 1 + 8 * y + 8 * y**3 - 8 * y**4
    return a, big_a, b, big_b


def verify_pythagorean_double() -> ProofReport:
    """The double-angle values again satisfy s^2 + c^2 + 2 s^2 c^2 = 1.

    With S^2 = a/A and C^2 = b/B, the claim S^2 + C^2 + 2 S^2 C^2 = 1 is
    a B + b A + 2 a b = A B after clearing denominators.
    """
    a, big_a, b, big_b = double_angle_squares()
    return ProofReport(
        "double-angle values keep the quartic relation",
        [IdentityCheck("S^2 + C^2 + 2 S^2 C^2 == 1", a * big_b + b * big_a + 2 * a * b, big_a * big_b)],
    )


def verify_all() -> list:
    return [
        verify_numerator_identity(),
        verify_first_term_reduction(),
        verify_double_angle_identity(),
        verify_pythagorean_double(),
    ]
