"""
Exact sparse polynomials in x_1..x_n and y_1..y_n over the integers.

Arithmetic is delegated to sympy's distributed polynomial rings; this
module only fixes the variable layout, the canonical term order and the
text/JSON forms used by the rest of the project.
"""
import functools
from dataclasses import dataclass

from django.utils.translation import gettext_lazy as _
from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring


@functools.lru_cache(maxsize=None)
def polynomial_ring(n):
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, n + 1)]
    R, *_gens = ring(names, ZZ, grlex)
    return R


@dataclass(frozen=True, order=True)
class Monomial:
    x_exps: tuple
    y_exps: tuple

    @classmethod
    def from_key(cls, n, key):
        return cls(tuple(key[:n]), tuple(key[n:]))

    @classmethod
    def one(cls, n):
        return cls((0,) * n, (0,) * n)

    @property
    def n(self):
        return len(self.x_exps)

    @property
    def key(self):
        return tuple(self.x_exps) + tuple(self.y_exps)

    @property
    def degree(self):
        return sum(self.x_exps) + sum(self.y_exps)

    def times_x(self, i):
        exps = list(self.x_exps)
        exps[i - 1] += 1
        return Monomial(tuple(exps), self.y_exps)

    def divides(self, other):
        return all(a <= b for a, b in zip(self.key, other.key))

    def __str__(self):
        factors = []
        for name, exps in (("x", self.x_exps), ("y", self.y_exps)):
            for index, exp in enumerate(exps, start=1):
                if exp == 1:
                    factors.append(f"{name}{index}")
                elif exp:
                    factors.append(f"{name}{index}^{exp}")
        return "*".join(factors) or "1"


def weight_monomial(rows, n):
    exps = [0] * n
    for row in rows:
        if not 1 <= row <= n:
            raise ValueError(_("Row %(row)s is outside 1..%(n)s.") % {"row": row, "n": n})
        exps[row - 1] += 1
    return Monomial(tuple(exps), (0,) * n)


def canonical_key(monomial):
    """graded; within a degree y exponents first so x terms lead, ascending"""
    return (monomial.degree, tuple(monomial.y_exps), tuple(monomial.x_exps))


class Polynomial:
    __slots__ = ("n", "element")

    def __init__(self, n, element=None):
        self.n = n
        self.element = polynomial_ring(n).zero if element is None else element

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, polynomial_ring(n).one)

    @classmethod
    def x(cls, n, i):
        return cls(n, polynomial_ring(n).gens[i - 1])

    @classmethod
    def y(cls, n, j):
        return cls(n, polynomial_ring(n).gens[n + j - 1])

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(_("Cannot combine polynomials in different variable counts."))
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Polynomial(self.n, self.element + other.element)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Polynomial(self.n, self.element - other.element)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.n, self.element * other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Polynomial(self.n, self.element * other.element)

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial(self.n, -self.element)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and dict(self.element) == dict(other.element)

    __hash__ = None

    def __bool__(self):
        return bool(self.element)

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def terms(self):
        pairs = [(Monomial.from_key(self.n, key), int(coeff)) for key, coeff in self.element.items()]
        return sorted(pairs, key=lambda pair: canonical_key(pair[0]))

    def support(self):
        return frozenset(Monomial.from_key(self.n, key) for key in self.element.keys())

    def coefficient(self, monomial):
        return int(self.element.get(monomial.key, 0))

    def _degrees(self):
        if not self:
            raise ValueError(_("The zero polynomial has no degree."))
        return [sum(key) for key in self.element.keys()]

    def total_degree(self):
        return max(self._degrees())

    def min_degree(self):
        return min(self._degrees())

    def homogeneous_component(self, degree):
        return signed_accumulate(
            self.n, [(m, c) for m, c in self.terms() if m.degree == degree]
        )

    def top_component(self):
        return self.homogeneous_component(self.total_degree())

    def min_degree_component(self):
        return self.homogeneous_component(self.min_degree())

    def specialize_y_zero(self):
        return signed_accumulate(
            self.n, [(m, c) for m, c in self.terms() if not any(m.y_exps)]
        )

    def to_text(self):
        parts = []
        for monomial, coeff in self.terms():
            body = str(monomial)
            magnitude = abs(coeff)
            if magnitude != 1:
                body = str(magnitude) if body == "1" else f"{magnitude}*{body}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts) or "0"

    def to_json(self):
        return [
            {"c": coeff, "x": list(monomial.x_exps), "y": list(monomial.y_exps)}
            for monomial, coeff in self.terms()
        ]

    @classmethod
    def from_json(cls, n, terms):
        return signed_accumulate(
            n, [(Monomial(tuple(term["x"]), tuple(term["y"])), term["c"]) for term in terms]
        )


def signed_accumulate(n, terms):
    totals = {}
    for monomial, coeff in terms:
        totals[monomial.key] = totals.get(monomial.key, 0) + coeff
    R = polynomial_ring(n)
    return Polynomial(n, R.from_dict({key: coeff for key, coeff in totals.items() if coeff}))


@functools.lru_cache(maxsize=65536)
def _factor_product(n, cells):
    product = Polynomial.one(n)
    for i, j in sorted(cells):
        x, y = Polynomial.x(n, i), Polynomial.y(n, j)
        product = product * (x + y - x * y)
    return product


def weight_factor_product(cells, n):
    """Expanded product of (x_i + y_j - x_i y_j) over ``cells``."""
    for i, j in cells:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(_("Cell (%(i)s,%(j)s) is outside the grid.") % {"i": i, "j": j})
    return _factor_product(n, frozenset(cells))
