"""
Exact sparse multivariate polynomials over the rationals.

Every variable carries cohomological degree 2, so a monomial of total
exponent k sits in cohomological degree 2k. Internally all degree arithmetic
is done in polynomial degree; reports convert with ``cohomological_degree``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]

VARIABLE_DEGREE = 2

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")
_TORUS_RE = re.compile(r"^t(\d+)$")


class ContextMismatchError(ValueError):
    """Two polynomials over different variable contexts were combined."""


class UnknownVariableError(ValueError):
    """A variable name is not part of the relevant context."""


class InexactDivisionError(RuntimeError):
    """A division that must be exact left a remainder."""


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (no decimals) into a Fraction."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    numerator, denominator = match.group(1), match.group(2) or "1"
    if int(denominator) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator))


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class VariableContext:
    """Ordered, uniquely named polynomial variables."""

    names: Tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"variable names must be unique: {self.names}")

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(
                f"variable {name!r} not in context {self.names}"
            ) from None

    def without(self, names: Iterable[str]) -> "VariableContext":
        dropped = set(names)
        return VariableContext(tuple(n for n in self.names if n not in dropped))

    @classmethod
    def equivariant(cls) -> "VariableContext":
        return cls(("t",))

    @classmethod
    def torus(cls, n: int) -> "VariableContext":
        return cls(tuple(f"t{i}" for i in range(1, n + 1)))

    @classmethod
    def tau_torus(cls, n: int) -> "VariableContext":
        return cls(
            tuple(f"tau{i}" for i in range(1, n + 1))
            + tuple(f"t{i}" for i in range(1, n + 1))
        )

    @classmethod
    def flag(cls, n: int, with_t: bool = True) -> "VariableContext":
        names = tuple(f"x{i}" for i in range(1, n + 1))
        return cls(names + (("t",) if with_t else ()))

    @classmethod
    def roots(cls, rank: int) -> "VariableContext":
        return cls(tuple(f"a{i}" for i in range(1, rank + 1)))

    @classmethod
    def weights(cls, rank: int, with_t: bool = True) -> "VariableContext":
        names = tuple(f"varpi{i}" for i in range(1, rank + 1))
        return cls(names + (("t",) if with_t else ()))

    @classmethod
    def peterson_z(cls, n: int, with_t: bool = True) -> "VariableContext":
        names = tuple(f"z{i}" for i in range(1, n))
        return cls(names + (("t",) if with_t else ()))


def _add_into(acc: Dict[Exponent, Fraction], exp: Exponent, coeff: Fraction) -> None:
    value = acc.get(exp, 0) + coeff
    if value:
        acc[exp] = value
    else:
        acc.pop(exp, None)


@dataclass(frozen=True)
class SparsePolynomial:
    """Map exponent vector -> nonzero Fraction over a VariableContext."""

    context: VariableContext
    terms: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        size = self.context.size
        cleaned: Dict[Exponent, Fraction] = {}
        for exp, coeff in self.terms.items():
            exp = tuple(exp)
            if len(exp) != size:
                raise ValueError(
                    f"exponent {exp} has {len(exp)} entries, context has {size}"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp}")
            coeff = Fraction(coeff)
            if coeff:
                _add_into(cleaned, exp, coeff)
        object.__setattr__(self, "terms", cleaned)

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self.terms.items())))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, context: VariableContext) -> "SparsePolynomial":
        return cls(context, {})

    @classmethod
    def constant(cls, context: VariableContext, value: Scalar) -> "SparsePolynomial":
        return cls(context, {(0,) * context.size: Fraction(value)})

    @classmethod
    def monomial(
        cls, context: VariableContext, exp: Sequence[int], coeff: Scalar = 1
    ) -> "SparsePolynomial":
        return cls(context, {tuple(exp): Fraction(coeff)})

    @classmethod
    def variable(cls, context: VariableContext, name: str) -> "SparsePolynomial":
        exp = [0] * context.size
        exp[context.index(name)] = 1
        return cls(context, {tuple(exp): Fraction(1)})

    @classmethod
    def gens(cls, context: VariableContext) -> List["SparsePolynomial"]:
        return [cls.variable(context, name) for name in context.names]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: object) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            if other.context != self.context:
                raise ContextMismatchError(
                    f"context mismatch: {self.context.names} vs {other.context.names}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePolynomial.constant(self.context, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for exp, coeff in other.terms.items():
            _add_into(acc, exp, coeff)
        return SparsePolynomial(self.context, acc)

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.context, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: object) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "SparsePolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                _add_into(acc, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return SparsePolynomial(self.context, acc)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "SparsePolynomial":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.scale(Fraction(1) / Fraction(other))

    def __pow__(self, exponent: int) -> "SparsePolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = SparsePolynomial.constant(self.context, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Scalar) -> "SparsePolynomial":
        factor = Fraction(factor)
        return SparsePolynomial(
            self.context, {e: c * factor for e, c in self.terms.items()}
        )

    def divide_monomial(self, exp: Sequence[int], coeff: Scalar) -> "SparsePolynomial":
        """Exact division by ``coeff * x^exp``."""
        coeff = Fraction(coeff)
        if not coeff:
            raise ZeroDivisionError("division by the zero monomial")
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            quotient = tuple(a - b for a, b in zip(e, exp))
            if any(q < 0 for q in quotient):
                raise InexactDivisionError(
                    f"{self} is not divisible by the monomial {tuple(exp)}"
                )
            out[quotient] = c / coeff
        return SparsePolynomial(self.context, out)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total polynomial degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def cohomological_degree(self) -> int:
        return VARIABLE_DEGREE * self.degree() if self.terms else -1

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_components(self) -> Dict[int, "SparsePolynomial"]:
        parts: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: SparsePolynomial(self.context, t) for d, t in sorted(parts.items())}

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.terms.get((0,) * self.context.size, Fraction(0))

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        """
        Terms in display order: total degree descending, then exponent
        vectors ascending. Within one degree this puts later context
        variables first, so t_3 - t_1 prints as "t3 - t1" and
        2a_1 + 2a_2 as "2*a2 + 2*a1". Formatting and JSON both use it.
        """
        return sorted(self.terms.items(), key=lambda item: (-sum(item[0]), item[0]))

    # -- substitution -------------------------------------------------------

    def substitute(
        self,
        images: Mapping[str, Union["SparsePolynomial", Scalar]],
        target: Optional[VariableContext] = None,
    ) -> "SparsePolynomial":
        """
        Replace variables by polynomials over ``target``.

        Variables without an image map to the same-named variable of the
        target context. The target defaults to the (shared) context of the
        polynomial images, or to this polynomial's own context.
        """
        for name in images:
            self.context.index(name)
        if target is None:
            contexts = {
                img.context for img in images.values() if isinstance(img, SparsePolynomial)
            }
            if len(contexts) > 1:
                raise ContextMismatchError("substitution images live in different contexts")
            target = contexts.pop() if contexts else self.context

        columns: List[SparsePolynomial] = []
        for name in self.context.names:
            image = images.get(name)
            if image is None:
                if name not in target.names:
                    raise UnknownVariableError(
                        f"variable {name!r} has no image and is missing from {target.names}"
                    )
                image = SparsePolynomial.variable(target, name)
            elif not isinstance(image, SparsePolynomial):
                image = SparsePolynomial.constant(target, image)
            elif image.context != target:
                raise ContextMismatchError(
                    f"image of {name!r} is over {image.context.names}, expected {target.names}"
                )
            columns.append(image)

        powers: Dict[Tuple[int, int], SparsePolynomial] = {}

        def power(idx: int, e: int) -> SparsePolynomial:
            key = (idx, e)
            if key not in powers:
                powers[key] = columns[idx] ** e
            return powers[key]

        acc: Dict[Exponent, Fraction] = {}
        one = SparsePolynomial.constant(target, 1)
        for exp, coeff in self.terms.items():
            term = one.scale(coeff)
            for idx, e in enumerate(exp):
                if e:
                    term = term * power(idx, e)
            for e2, c2 in term.terms.items():
                _add_into(acc, e2, c2)
        return SparsePolynomial(target, acc)

    # -- formatting and serialization ----------------------------------------

    def _monomial_text(self, exp: Exponent) -> str:
        parts = []
        for name, e in zip(self.context.names, exp):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def format(self) -> str:
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for idx, (exp, coeff) in enumerate(self.sorted_terms()):
            magnitude = abs(coeff)
            mono = self._monomial_text(exp)
            if not mono:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{format_rational(magnitude)}*{mono}"
            if idx == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.format()!r}, vars={list(self.context.names)})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.context.names),
            "terms": [
                {"coeff": format_rational(c), "exp": list(e)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SparsePolynomial":
        context = VariableContext(tuple(data["vars"]))
        terms: Dict[Exponent, Fraction] = {}
        for term in data["terms"]:
            _add_into(terms, tuple(term["exp"]), parse_rational(str(term["coeff"])))
        return cls(context, terms)


def arith(
    p: SparsePolynomial, q: Union[SparsePolynomial, Scalar], op: str
) -> SparsePolynomial:
    """Dispatch add/sub/mul/scale; raises ContextMismatchError across contexts."""
    if op == "scale":
        if isinstance(q, SparsePolynomial):
            raise TypeError("scale expects a rational factor")
        return p.scale(q)
    if isinstance(q, SparsePolynomial) and q.context != p.context:
        raise ContextMismatchError(
            f"context mismatch: {p.context.names} vs {q.context.names}"
        )
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def substitute(
    p: SparsePolynomial,
    sigma: Mapping[str, Union[SparsePolynomial, Scalar]],
    target: Optional[VariableContext] = None,
) -> SparsePolynomial:
    return p.substitute(sigma, target)


def specialize_pi(p: SparsePolynomial) -> SparsePolynomial:
    """Send every torus variable t_i to i*t; other variables pass through."""
    names = p.context.names
    kept = [name for name in names if not _TORUS_RE.match(name)]
    if "t" not in kept:
        kept.append("t")
    target = VariableContext(tuple(kept))
    t = SparsePolynomial.variable(target, "t")
    images = {}
    for name in names:
        match = _TORUS_RE.match(name)
        if match:
            images[name] = t * int(match.group(1))
    return p.substitute(images, target)


def elementary_symmetric(i: int, variables: Sequence[SparsePolynomial]) -> SparsePolynomial:
    """e_i of the given polynomials (usually variables)."""
    if not variables:
        raise ValueError("elementary_symmetric needs at least one variable")
    if not 1 <= i <= len(variables):
        raise ValueError(f"e_{i} requires 1 <= i <= {len(variables)}")
    context = variables[0].context
    total = SparsePolynomial.zero(context)
    for combo in itertools.combinations(variables, i):
        product = SparsePolynomial.constant(context, 1)
        for var in combo:
            product = product * var
        total = total + product
    return total


def monomials_of_degree(m: int, d: int) -> List[Exponent]:
    """All exponent vectors of length m and total degree d, in a fixed order."""
    if d < 0:
        return []
    out = []
    for combo in itertools.combinations_with_replacement(range(m), d):
        exp = [0] * m
        for idx in combo:
            exp[idx] += 1
        out.append(tuple(exp))
    return out


@dataclass(frozen=True)
class HilbertSeriesPoly:
    """
    P(q) / (1 - q^2)^denominator with ``coefficients[k]`` the coefficient of
    q^(2k), i.e. exponents are stored in the cohomological convention.
    """

    coefficients: Tuple[int, ...] = (1,)
    denominator: int = 0

    def __post_init__(self) -> None:
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @classmethod
    def q_integer(cls, m: int) -> "HilbertSeriesPoly":
        """1 + q^2 + ... + q^(2(m-1))."""
        if m < 1:
            raise ValueError("q-integer needs m >= 1")
        return cls(tuple([1] * m))

    @classmethod
    def from_generator_degrees(
        cls, generator_degrees: Sequence[int], variable_count: int
    ) -> "HilbertSeriesPoly":
        """
        Series of k[x_1..x_m]/(theta_1..theta_r) when the theta form a regular
        sequence; degrees are polynomial degrees.
        """
        if len(generator_degrees) > variable_count:
            raise ValueError("more generators than variables cannot be regular")
        series = cls((1,), variable_count - len(generator_degrees))
        for d in generator_degrees:
            if d < 1:
                raise ValueError("generators must have positive degree")
            series = series * cls.q_integer(d)
        return series

    def __mul__(self, other: "HilbertSeriesPoly") -> "HilbertSeriesPoly":
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return HilbertSeriesPoly(tuple(out), self.denominator + other.denominator)

    def top_degree(self) -> int:
        """Cohomological degree of the numerator's top term."""
        return 2 * (len(self.coefficients) - 1)

    def total(self) -> int:
        if self.denominator:
            raise ValueError("infinite-dimensional series has no finite total")
        return sum(self.coefficients)

    def expand(self, up_to: int) -> Dict[int, int]:
        """Power-series coefficients {cohomological degree: dim} up to ``up_to``."""
        out: Dict[int, int] = {}
        for k in range(up_to // 2 + 1):
            value = 0
            for i, a in enumerate(self.coefficients[: k + 1]):
                j = k - i
                if self.denominator == 0:
                    value += a if j == 0 else 0
                else:
                    value += a * comb(j + self.denominator - 1, self.denominator - 1)
            out[2 * k] = value
        return out

    def format(self) -> str:
        pieces: List[str] = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                mono = f"q^{2 * k}"
                body = mono if magnitude == 1 else f"{magnitude}{mono}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        text = "".join(pieces) or "0"
        if self.denominator:
            power = "" if self.denominator == 1 else f"^{self.denominator}"
            text = f"({text})/(1 - q^2){power}"
        return text

    def __str__(self) -> str:
        return self.format()
