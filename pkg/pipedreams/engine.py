"""
Pipe dreams of a permutation and the Grothendieck polynomials they sum to.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass

from django.conf import settings
from django.utils.translation import gettext_lazy as _

from diagrams.diagram import Diagram
from diagrams.exceptions import MalformedDiagram
from diagrams.tiles import DiagramKind, Tile
from permutations.permutation import Permutation
from polynomials.polynomial import signed_accumulate, weight_factor_product, weight_monomial

from .bounds import check_bound
from .cache import load_fillings, store_fillings
from .staircase import choice_cells, fill, pd_tiles, sweep

logger = logging.getLogger(__name__)

_indexes = {}


@dataclass(frozen=True)
class PipeDreamIndex:
    n: int
    by_perm: dict

    def __getitem__(self, w):
        return self.by_perm.get(w, ())

    def total(self):
        return sum(len(diagrams) for diagrams in self.by_perm.values())


def _build_index(n):
    expected = 1 << len(choice_cells(n))
    pairs = load_fillings(n, expected)
    if pairs is None:
        logger.info("enumerating %s fillings for n=%s", expected, n)
        pairs = sweep(n, settings.PIPEDREAM_SWEEP_WORKERS)
        store_fillings(n, pairs)
    grouped = defaultdict(list)
    for bits, one_line in pairs:
        grouped[Permutation(one_line)].append(Diagram(DiagramKind.PD, n, pd_tiles(n, bits)))
    return PipeDreamIndex(
        n,
        {
            w: tuple(sorted(diagrams, key=Diagram.sort_key))
            for w, diagrams in sorted(grouped.items())
        },
    )


def enumerate_all(n):
    check_bound(n)
    if n not in _indexes:
        _indexes[n] = _build_index(n)
    return _indexes[n]


def pd_set(w):
    return enumerate_all(w.n)[w]


def backtrack_pd_set(w):
    """PD(w) generated directly from the top reading w^-1."""
    check_bound(w.n)
    diagrams = [
        Diagram(DiagramKind.PD, w.n, tiles)
        for tiles in fill(DiagramKind.PD, w.n, w.inverse().one_line)
    ]
    return tuple(sorted(diagrams, key=Diagram.sort_key))


def wty_pd(diagram):
    if diagram.kind != DiagramKind.PD:
        raise MalformedDiagram(_("Expected a pipe dream, got a %(kind)s.") % {"kind": diagram.kind.value})
    return frozenset(diagram.cells_of(Tile.CROSS))


def sign(weighty, length):
    return -1 if (weighty - length) % 2 else 1


def grothendieck(w):
    length = w.length()
    terms = []
    for diagram in pd_set(w):
        cells = wty_pd(diagram)
        terms.append((weight_monomial([i for i, _j in cells], w.n), sign(len(cells), length)))
    return signed_accumulate(w.n, terms)


def double_grothendieck(w):
    length = w.length()
    total = signed_accumulate(w.n, [])
    for diagram in pd_set(w):
        cells = wty_pd(diagram)
        total = total + weight_factor_product(cells, w.n) * sign(len(cells), length)
    return total


def raj(w):
    return max(len(wty_pd(diagram)) for diagram in pd_set(w))


def top_pd_set(w):
    degree = raj(w)
    return tuple(diagram for diagram in pd_set(w) if len(wty_pd(diagram)) == degree)


def grothendieck_top(w):
    """Top component taken with positive signs, by enumeration."""
    return signed_accumulate(
        w.n,
        [(weight_monomial([i for i, _j in wty_pd(diagram)], w.n), 1) for diagram in top_pd_set(w)],
    )


def clear_indexes():
    _indexes.clear()
