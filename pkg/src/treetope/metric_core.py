"""Exact finite (pseudo)metric spaces.

All distances are `fractions.Fraction`; there is no floating point and no
tolerance anywhere in the package.  A `DistanceMatrix` is a structural
container (square, labelled); whether it actually is a pseudometric or a
metric is decided by :func:`validate`, which reports violations instead of
raising.  Operations whose mathematics requires a pseudometric refuse
non-pseudometric input with :class:`NotAPseudometric`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import NotAPseudometric, ParseError


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer or a finite decimal into an exact Fraction.

    Decimals convert exactly ("0.25" -> 1/4); results are normalized to
    lowest terms by construction.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty rational literal")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in rational literal {text!r}") from None
    except ValueError:
        raise ParseError(f"not a rational literal: {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    return str(value)


@dataclass(frozen=True)
class DistanceMatrix:
    """Labelled square matrix of exact rationals.

    Construction checks shape only; metric properties are examined by
    :func:`validate`.
    """

    labels: tuple[str, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ParseError("duplicate point labels")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ParseError("distance matrix is not square with matching labels")

    @classmethod
    def from_rows(cls, labels: Sequence[str], rows) -> "DistanceMatrix":
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        return cls(tuple(labels), entries)

    @property
    def size(self) -> int:
        return len(self.labels)

    def d(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class Partition:
    """Partition of {0,...,n-1} in canonical form: each block sorted, blocks
    ordered by their minimal element."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks) -> "Partition":
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        seen = [i for b in canon for i in b]
        if len(seen) != len(set(seen)):
            raise ValueError("partition blocks are not disjoint")
        return cls(canon)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple((i,) for i in range(n)))

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def block_index(self) -> dict[int, int]:
        """Map each element to the index of its block."""
        out = {}
        for b, block in enumerate(self.blocks):
            for i in block:
                out[i] = b
        return out

    def is_discrete(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def refines(self, other: "Partition") -> bool:
        coarse = other.block_index()
        return all(len({coarse[i] for i in b}) == 1 for b in self.blocks)


@dataclass(frozen=True)
class PseudometricReport:
    """Outcome of the exhaustive metric checks.

    A witness is present exactly when the corresponding flag is False; all
    witnesses are the lexicographically first violations, so results are
    deterministic.
    """

    is_symmetric: bool
    zero_diagonal: bool
    triangle_ok: bool
    triangle_witness: Optional[tuple[int, int, int]]
    separates_points: bool
    four_point: bool
    four_point_witness: Optional[tuple[int, int, int, int]]

    @property
    def is_pseudometric(self) -> bool:
        return self.is_symmetric and self.zero_diagonal and self.triangle_ok

    @property
    def is_metric(self) -> bool:
        return self.is_pseudometric and self.separates_points


def _four_point_sweep(m: DistanceMatrix):
    """Exhaustive four point condition over all quadruples (repeats included);
    returns (holds, first_witness)."""
    n = m.size
    d = m.entries
    rng = range(n)
    for x in rng:
        dx = d[x]
        for y in rng:
            dxy = dx[y]
            for z in rng:
                dxz = dx[z]
                dyz = d[y][z]
                for w in rng:
                    if dxy + d[z][w] > max(dxz + d[y][w], dx[w] + dyz):
                        return False, (x, y, z, w)
    return True, None


def four_point_check(m: DistanceMatrix):
    """Check d(x,y)+d(z,w) <= max(d(x,z)+d(y,w), d(x,w)+d(z,y)) for all
    quadruples.  Returns (holds, witness) with the lexicographically first
    violating quadruple when one exists."""
    return _four_point_sweep(m)


def validate(m: DistanceMatrix) -> PseudometricReport:
    """Exhaustive pseudometric / metric / tree-likeness report.

    O(n^3) triangle sweep and O(n^4) four-point sweep; all witnesses are the
    lexicographically first violations found.
    """
    n = m.size
    d = m.entries
    is_symmetric = all(d[i][j] == d[j][i] for i in range(n) for j in range(i + 1, n))
    zero_diagonal = all(d[i][i] == 0 for i in range(n))

    triangle_ok = True
    triangle_witness = None
    for i in range(n):
        if not triangle_ok:
            break
        for j in range(n):
            if not triangle_ok:
                break
            for k in range(n):
                if d[i][j] > d[i][k] + d[k][j]:
                    triangle_ok = False
                    triangle_witness = (i, j, k)
                    break

    separates_points = all(
        d[i][j] != 0 for i in range(n) for j in range(n) if i != j
    )
    four_point, four_point_witness = _four_point_sweep(m)
    return PseudometricReport(
        is_symmetric=is_symmetric,
        zero_diagonal=zero_diagonal,
        triangle_ok=triangle_ok,
        triangle_witness=triangle_witness,
        separates_points=separates_points,
        four_point=four_point,
        four_point_witness=four_point_witness,
    )


def require_pseudometric(m: DistanceMatrix) -> PseudometricReport:
    """Return the validation report, raising NotAPseudometric on failure."""
    report = validate(m)
    if not report.is_pseudometric:
        raise NotAPseudometric("input is not a pseudometric", report=report)
    return report


def zero_quotient(m: DistanceMatrix):
    """Collapse zero-distance classes.

    Returns (quotient_matrix, partition).  The quotient is a metric on the
    blocks (well defined by the triangle inequality); merged labels are
    concatenated in index order.  A metric quotients to itself with the
    discrete partition.
    """
    require_pseudometric(m)
    n = m.size
    d = m.entries
    seen = [False] * n
    blocks = []
    for i in range(n):
        if seen[i]:
            continue
        block = [j for j in range(n) if d[i][j] == 0]
        for j in block:
            seen[j] = True
        blocks.append(tuple(block))
    partition = Partition.from_blocks(blocks)
    reps = [b[0] for b in partition.blocks]
    labels = tuple("".join(m.labels[i] for i in b) for b in partition.blocks)
    entries = tuple(
        tuple(d[ri][rj] for rj in reps) for ri in reps
    )
    return DistanceMatrix(labels, entries), partition


def load_distance_matrix(text: str) -> DistanceMatrix:
    """Parse the exact matrix file format.

    First non-blank line: the point count n.  Then n lines, each
    "label v_1 ... v_n" with whitespace-separated rationals or decimals.
    The full square matrix is required; symmetry is checked by
    :func:`validate`, not assumed here.
    """
    lines = [(k + 1, ln) for k, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise ParseError("empty matrix file")
    lineno, head = lines[0]
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(f"line {lineno}: expected the point count, got {head!r}") from None
    if n < 1:
        raise ParseError(f"line {lineno}: point count must be positive")
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} matrix rows, found {len(lines) - 1}")
    labels = []
    rows = []
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n + 1:
            raise ParseError(
                f"line {lineno}: expected a label and {n} entries, got {len(parts)} fields"
            )
        labels.append(parts[0])
        try:
            rows.append([parse_rational(p) for p in parts[1:]])
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if len(set(labels)) != n:
        raise ParseError("duplicate point labels in matrix file")
    return DistanceMatrix(tuple(labels), tuple(tuple(r) for r in rows))
