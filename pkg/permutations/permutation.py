"""
Permutations of {1..n} in one-line notation and the statistics and codes
derived from them.

Positions and values are one-based everywhere a caller can see them.
"""
import itertools
from dataclasses import dataclass

from django.db import models
from django.utils.translation import gettext_lazy as _


class InvalidPermutation(ValueError):
    pass


class NotInverseFireworks(ValueError):
    pass


class CodeRole(models.TextChoices):
    ALPHA_PRIME = "alpha_prime", "alpha prime"
    ALPHA = "alpha", "alpha"
    COLUMN_TO_ROW = "column_to_row", "column-to-row"


@dataclass(frozen=True)
class Code:
    """
    Per column, the entering row of the pipe exiting there (0 if none).

    ``n`` is the ambient permutation size, so an ``alpha`` code has
    ``n - 1`` entries while ``alpha_prime`` has ``n``.
    """

    entries: tuple
    n: int
    role: str = CodeRole.COLUMN_TO_ROW

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        nonzero = [value for value in self.entries if value]
        if any(value < 0 or value > self.n for value in self.entries):
            raise InvalidPermutation(_("Code entries must lie in 0..%(n)s.") % {"n": self.n})
        if len(nonzero) != len(set(nonzero)):
            raise InvalidPermutation(_("Non-zero code entries must be distinct."))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def rows(self):
        return frozenset(value for value in self.entries if value)

    def padded(self):
        if len(self.entries) == self.n - 1:
            return (0,) + self.entries
        return self.entries

    def realize(self):
        entries = self.padded()
        missing = iter(sorted(set(range(1, self.n + 1)) - self.rows))
        return Permutation(tuple(value if value else next(missing) for value in entries))

    def is_realizable(self):
        entries = self.padded()
        if len(entries) != self.n:
            return False
        filled = self.realize().one_line
        maxima = {position for position, value in enumerate(filled, start=1) if value == max(filled[:position])}
        return maxima == {position for position, value in enumerate(entries, start=1) if not value}

    def same_entries(self, other):
        return tuple(self.entries) == tuple(other)


@dataclass(frozen=True, order=True)
class Permutation:
    one_line: tuple

    def __post_init__(self):
        values = tuple(self.one_line)
        object.__setattr__(self, "one_line", values)
        if not values:
            raise InvalidPermutation(_("A permutation needs at least one value."))
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidPermutation(_("Values must be integers, got %(value)r.") % {"value": value})
            if not 1 <= value <= len(values):
                raise InvalidPermutation(
                    _("Value %(value)s is out of range 1..%(n)s.") % {"value": value, "n": len(values)}
                )
        if len(set(values)) != len(values):
            raise InvalidPermutation(_("Values must be distinct."))

    @classmethod
    def from_one_line(cls, values):
        return cls(tuple(values))

    @classmethod
    def parse(cls, text):
        """
        "2,4,1,3" or, for n <= 9, the compact "2413".
        """
        text = str(text).strip()
        if not text:
            raise InvalidPermutation(_("A permutation needs at least one value."))
        try:
            if "," in text:
                values = [int(part) for part in text.split(",")]
            else:
                values = [int(char) for char in text]
        except ValueError:
            raise InvalidPermutation(_("Cannot read %(text)r as a permutation.") % {"text": text})
        return cls.from_one_line(values)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n):
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def all(cls, n):
        return [cls(values) for values in itertools.permutations(range(1, n + 1))]

    @property
    def n(self):
        return len(self.one_line)

    def __call__(self, i):
        return self.one_line[i - 1]

    def __str__(self):
        if self.n <= 9:
            return "".join(str(value) for value in self.one_line)
        return ",".join(str(value) for value in self.one_line)

    def inverse(self):
        inverse = [0] * self.n
        for position, value in enumerate(self.one_line, start=1):
            inverse[value - 1] = position
        return Permutation(tuple(inverse))

    def length(self):
        return sum(
            1 for a, b in itertools.combinations(self.one_line, 2) if a > b
        )

    def descents(self):
        return tuple(
            i for i in range(1, self.n) if self.one_line[i - 1] > self.one_line[i]
        )

    def maj(self):
        return sum(self.descents())

    def decreasing_runs(self):
        runs = [[self.one_line[0]]]
        for value in self.one_line[1:]:
            if value < runs[-1][-1]:
                runs[-1].append(value)
            else:
                runs.append([value])
        return [tuple(run) for run in runs]

    def is_fireworks(self):
        firsts = [run[0] for run in self.decreasing_runs()]
        return all(a < b for a, b in zip(firsts, firsts[1:]))

    def is_inverse_fireworks(self):
        return self.inverse().is_fireworks()

    def lr_maxima(self):
        maxima, best = set(), 0
        for value in self.one_line:
            if value > best:
                maxima.add(value)
                best = value
        return frozenset(maxima)

    def alpha_prime(self):
        inverse = self.inverse()
        maxima = inverse.lr_maxima()
        return Code(
            tuple(0 if value in maxima else value for value in inverse.one_line),
            self.n,
            CodeRole.ALPHA_PRIME,
        )

    def alpha(self):
        self.require_inverse_fireworks()
        return Code(self.alpha_prime().entries[1:], self.n, CodeRole.ALPHA)

    def r_stat(self):
        return sum(
            position - 1
            for position, value in enumerate(self.alpha_prime().entries, start=1)
            if value
        )

    def require_inverse_fireworks(self):
        if not self.is_inverse_fireworks():
            raise NotInverseFireworks(
                _("%(w)s is not an inverse fireworks permutation.") % {"w": self}
            )
        return self
