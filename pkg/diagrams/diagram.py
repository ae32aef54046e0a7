"""
Rectangular grids of tiles tagged PD, MVPD or BVPD.

Coordinates are (row, column), one-based, row 1 at the top. A "lower" row
has a larger index.
"""
from dataclasses import dataclass

from django.utils.translation import gettext_lazy as _

from .exceptions import MalformedDiagram
from .tiles import ALPHABET, WEST_IN, DiagramKind, Region, Side, Tile, allowed_tiles, grid_shape, region
from .tracing import trace


@dataclass(frozen=True)
class Diagram:
    kind: str
    n: int
    tiles: tuple

    def __post_init__(self):
        try:
            kind = DiagramKind(self.kind)
            tiles = tuple(tuple(Tile(tile) for tile in row) for row in self.tiles)
        except ValueError as exc:
            raise MalformedDiagram(str(exc))
        rows, cols = grid_shape(kind, self.n)
        if self.n < 1 or len(tiles) != rows or any(len(row) != cols for row in tiles):
            raise MalformedDiagram(
                _("A %(kind)s of size %(n)s needs a %(rows)sx%(cols)s grid.")
                % {"kind": kind.value, "n": self.n, "rows": rows, "cols": cols}
            )
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "tiles", tiles)

    @classmethod
    def blank(cls, kind, n):
        rows, cols = grid_shape(kind, n)
        return cls(kind, n, ((Tile.BLANK,) * cols,) * rows)

    @classmethod
    def all_bump(cls, n):
        """The single pipe dream of the identity."""
        return cls(
            DiagramKind.PD,
            n,
            tuple(
                tuple(_identity_tile(n, i, j) for j in range(1, n + 1))
                for i in range(1, n + 1)
            ),
        )

    @property
    def rows(self):
        return len(self.tiles)

    @property
    def cols(self):
        return grid_shape(self.kind, self.n)[1]

    @property
    def text_rows(self):
        return tuple("".join(tile.value for tile in row) for row in self.tiles)

    @property
    def entering_rows(self):
        return frozenset(
            i for i, row in enumerate(self.tiles, start=1) if row and row[0] in WEST_IN
        )

    def tile(self, i, j):
        return self.tiles[i - 1][j - 1]

    def cells(self):
        for i in range(1, self.rows + 1):
            for j in range(1, self.cols + 1):
                yield i, j

    def cells_of(self, *kinds):
        return tuple((i, j) for i, j in self.cells() if self.tile(i, j) in kinds)

    def count(self, *kinds):
        return len(self.cells_of(*kinds))

    def replace(self, changes, kind=None):
        grid = [list(row) for row in self.tiles]
        for (i, j), tile in changes.items():
            grid[i - 1][j - 1] = tile
        return Diagram(kind or self.kind, self.n, tuple(tuple(row) for row in grid))

    def sort_key(self):
        return render_text(self)

    def __str__(self):
        return render_text(self)


def _identity_tile(n, i, j):
    if i + j <= n:
        return Tile.BUMP
    if i + j == n + 1:
        return Tile.ELBOW_WN
    return Tile.BLANK


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple
    trace: object = None

    def __bool__(self):
        return self.valid


def render_text(diagram, trim=False):
    lines = list(diagram.text_rows)
    if trim:
        while lines and set(lines[-1]) <= {Tile.BLANK.value}:
            lines.pop()
        width = max((len(line.rstrip(Tile.BLANK.value)) for line in lines), default=0)
        lines = [line[:width] for line in lines]
    return "\n".join(lines)


def parse_text(kind, n, text):
    lines = [line.rstrip() for line in text.replace("\r", "").rstrip("\n").split("\n")]
    diagram = Diagram(kind, n, tuple(tuple(line) for line in lines))
    report = validate(diagram)
    if not report:
        raise MalformedDiagram("; ".join(report.violations))
    return diagram


def pipe_has_horizontal_below(diagram, result, label, row):
    return any(
        step.cell[0] > row and diagram.tile(*step.cell) == Tile.HORIZONTAL
        for step in result.pipe_paths.get(label, ())
    )


def mark_rule_violations(diagram, result):
    violations = []
    for i, j in diagram.cells_of(Tile.MARKED_SE):
        label = result.label_leaving(i, j, Side.EAST)
        if not pipe_has_horizontal_below(diagram, result, label, i):
            violations.append(
                str(
                    _("Marked tile at (%(i)s,%(j)s) has no Horizontal of pipe %(label)s below it.")
                    % {"i": i, "j": j, "label": label}
                )
            )
    return violations


def validate(diagram):
    violations = []
    for i, j in diagram.cells():
        tile = diagram.tile(i, j)
        if tile not in ALPHABET[diagram.kind]:
            violations.append(
                str(_("%(tile)s at (%(i)s,%(j)s) is not a %(kind)s tile.")
                    % {"tile": tile.label, "i": i, "j": j, "kind": diagram.kind.value})
            )
        elif tile not in allowed_tiles(diagram.kind, diagram.n, i, j):
            where = region(diagram.kind, diagram.n, i, j)
            violations.append(
                str(_("%(tile)s at (%(i)s,%(j)s) is not allowed %(where)s.")
                    % {"tile": tile.label, "i": i, "j": j, "where": Region(where).label})
            )
    if violations:
        return ValidationReport(False, tuple(violations))
    try:
        result = trace(diagram)
    except MalformedDiagram as exc:
        return ValidationReport(False, (str(exc),))
    if diagram.kind == DiagramKind.PD and diagram.entering_rows != set(range(1, diagram.n + 1)):
        violations.append(str(_("Every row of a pipe dream must have an entering pipe.")))
    if diagram.kind == DiagramKind.MVPD:
        violations.extend(mark_rule_violations(diagram, result))
    return ValidationReport(not violations, tuple(violations), result)
