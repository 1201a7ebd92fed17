"""Independent oracle: complete +/* operation tables on bare symbols.

Symbols are 0..q-1 with 0 and 1 pinned as the identities.  The search
fills the addition table first (a symmetric Latin square pruned by partial
associativity), then the multiplication table, where distributivity is
applied eagerly: each placed product forces a cascade of other cells, so
only a handful of genuine choices remain.  Every completed pair still has
to pass a from-scratch axiom checker that shares no code with the search,
and solutions are deduplicated up to relabelings fixing 0 and 1.

No field theory enters the search; uniqueness for q in {2,3,4,5,7} and
non-existence for q = 6 are discovered by exhausting the tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .errors import OrderMismatchError, ScaleLimitError
from .field_extension import FieldSpec, operation_code_tables

MAX_ORACLE_ORDER = 7

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TableSolution:
    order: int
    add: Table
    mul: Table


def check_axioms(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]]) -> list[str]:
    """Exhaustive field-axiom scan, written from scratch: closure and shape,
    both identities, commutativity, associativity, distributivity, additive
    inverses, and multiplicative inverses with no zero divisors.  Returns
    the list of violations (empty means the pair is a field)."""
    q = len(add)
    violations: list[str] = []
    for table, op in ((add, "+"), (mul, "*")):
        if len(table) != q or any(len(row) != q for row in table):
            violations.append(f"{op} table is not {q}x{q}")
            return violations
        for i in range(q):
            for j in range(q):
                if not 0 <= table[i][j] < q:
                    violations.append(f"{op} entry ({i},{j}) out of range")
                    return violations
    for i in range(q):
        if add[0][i] != i or add[i][0] != i:
            violations.append(f"0 is not the additive identity at {i}")
        if mul[1][i] != i or mul[i][1] != i:
            violations.append(f"1 is not the multiplicative identity at {i}")
        if 0 not in add[i]:
            violations.append(f"{i} has no additive inverse")
        if i != 0 and 1 not in mul[i]:
            violations.append(f"{i} has no multiplicative inverse")
    for i in range(q):
        for j in range(q):
            if add[i][j] != add[j][i]:
                violations.append(f"+ not commutative at ({i},{j})")
            if mul[i][j] != mul[j][i]:
                violations.append(f"* not commutative at ({i},{j})")
            if i != 0 and j != 0 and mul[i][j] == 0:
                violations.append(f"zero divisors: {i}*{j} = 0")
            for k in range(q):
                if add[add[i][j]][k] != add[i][add[j][k]]:
                    violations.append(f"+ not associative at ({i},{j},{k})")
                if mul[mul[i][j]][k] != mul[i][mul[j][k]]:
                    violations.append(f"* not associative at ({i},{j},{k})")
                if mul[i][add[j][k]] != add[mul[i][j]][mul[i][k]]:
                    violations.append(f"not distributive at ({i},{j},{k})")
    return violations


def _addition_tables(q: int) -> Iterator[Table]:
    """All symmetric Latin squares with identity row 0 that never violate
    associativity on any fully-determined triple."""
    add: list[list[int | None]] = [[None] * q for _ in range(q)]
    for j in range(q):
        add[0][j] = j
        add[j][0] = j
    row_mask = [1 << i for i in range(q)]
    row_mask[0] = (1 << q) - 1
    cells = [(i, j) for i in range(1, q) for j in range(i, q)]

    def assoc_ok() -> bool:
        for a in range(q):
            row_a = add[a]
            for b in range(q):
                ab = row_a[b]
                row_b = add[b]
                for c in range(q):
                    bc = row_b[c]
                    if ab is not None and bc is not None:
                        left = add[ab][c]
                        right = row_a[bc]
                        if left is not None and right is not None and left != right:
                            return False
        return True

    def fill(k: int) -> Iterator[Table]:
        if k == len(cells):
            yield tuple(tuple(row) for row in add)  # type: ignore[misc]
            return
        i, j = cells[k]
        for v in range(q):
            bit = 1 << v
            if row_mask[i] & bit or (i != j and row_mask[j] & bit):
                continue
            add[i][j] = v
            add[j][i] = v
            row_mask[i] |= bit
            if i != j:
                row_mask[j] |= bit
            if assoc_ok():
                yield from fill(k + 1)
            add[i][j] = None
            add[j][i] = None
            row_mask[i] &= ~bit
            if i != j:
                row_mask[j] &= ~bit

    yield from fill(0)


def _multiplication_tables(q: int, add: Table) -> Iterator[Table]:
    """Complete the multiplication table against a fixed addition table.

    Rows 0 and 1 are pre-filled (annihilator and identity); every other
    placement propagates a*(b+c) = a*b + a*c through a work queue, so a
    conflict or a near-complete table appears after very few choices."""
    mul: list[list[int | None]] = [[None] * q for _ in range(q)]
    row_mask = [0] * q
    trail: list[tuple[int, int, int]] = []

    def assign(a: int, b: int, v: int) -> bool:
        queue = [(a, b, v)]
        while queue:
            x, y, w = queue.pop()
            cur = mul[x][y]
            if cur is not None:
                if cur != w:
                    return False
                continue
            if x == 0 or y == 0:
                if w != 0:
                    return False
            else:
                if w == 0:  # nonzero elements cannot multiply to 0
                    return False
                bit = 1 << w
                if row_mask[x] & bit or (x != y and row_mask[y] & bit):
                    return False
                row_mask[x] |= bit
                if x != y:
                    row_mask[y] |= bit
            mul[x][y] = w
            mul[y][x] = w
            trail.append((x, y, w))
            sides = ((x, y),) if x == y else ((x, y), (y, x))
            for a2, b2 in sides:
                if a2 <= 1:  # rows 0 and 1 propagate nothing new
                    continue
                row = mul[a2]
                for c in range(q):
                    wc = row[c]
                    if wc is None:
                        continue
                    queue.append((a2, add[b2][c], add[w][wc]))
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            x, y, w = trail.pop()
            mul[x][y] = None
            mul[y][x] = None
            if x != 0 and y != 0:
                bit = ~(1 << w)
                row_mask[x] &= bit
                if x != y:
                    row_mask[y] &= bit

    for j in range(q):
        if not assign(0, j, 0):
            return
    for j in range(1, q):
        if not assign(1, j, j):
            return

    cells = [(i, j) for i in range(2, q) for j in range(i, q)]

    def fill() -> Iterator[Table]:
        target = next(((i, j) for (i, j) in cells if mul[i][j] is None), None)
        if target is None:
            yield tuple(tuple(row) for row in mul)  # type: ignore[misc]
            return
        i, j = target
        for v in range(1, q):
            bit = 1 << v
            if row_mask[i] & bit or (i != j and row_mask[j] & bit):
                continue
            mark = len(trail)
            if assign(i, j, v):
                yield from fill()
            undo(mark)

    yield from fill()


def _transport(table: Table, pi: Sequence[int]) -> Table:
    q = len(table)
    out = [[0] * q for _ in range(q)]
    for i in range(q):
        for j in range(q):
            out[pi[i]][pi[j]] = pi[table[i][j]]
    return tuple(tuple(row) for row in out)


def _canonical_form(sol: TableSolution) -> tuple[Table, Table]:
    best: tuple[Table, Table] | None = None
    for perm in permutations(range(2, sol.order)):
        pi = (0, 1) + perm
        key = (_transport(sol.add, pi), _transport(sol.mul, pi))
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def complete_tables(q: int) -> list[TableSolution]:
    """Every way to complete the +/* tables of q symbols into a field,
    deduplicated up to relabelings fixing 0 and 1.  An empty list means no
    field of order q exists; the search discovers that by exhaustion."""
    if q < 2:
        raise ValueError(f"need at least the symbols 0 and 1, got q = {q}")
    if q > MAX_ORACLE_ORDER:
        raise ScaleLimitError(
            f"table completion is guarded at q <= {MAX_ORACLE_ORDER}, got {q}"
        )
    by_class: dict[tuple[Table, Table], TableSolution] = {}
    for add in _addition_tables(q):
        for mul in _multiplication_tables(q, add):
            if check_axioms(add, mul):
                continue
            canon = _canonical_form(TableSolution(q, add, mul))
            if canon not in by_class:
                by_class[canon] = TableSolution(q, canon[0], canon[1])
    return [by_class[key] for key in sorted(by_class)]


def match_against_tables(
    sol: TableSolution,
    add: Sequence[Sequence[int]],
    mul: Sequence[Sequence[int]],
) -> bool:
    """True iff some relabeling of sol's symbols fixing 0 and 1 transports
    both of its tables exactly onto the given ones."""
    q = sol.order
    if len(add) != q or len(mul) != q:
        raise OrderMismatchError(f"solution order {q} vs tables of order {len(add)}")
    add_t = tuple(tuple(int(e) for e in row) for row in add)
    mul_t = tuple(tuple(int(e) for e in row) for row in mul)
    for perm in permutations(range(2, q)):
        pi = (0, 1) + perm
        if _transport(sol.add, pi) == add_t and _transport(sol.mul, pi) == mul_t:
            return True
    return False


def match_against_field(sol: TableSolution, F: FieldSpec) -> bool:
    """True iff the abstract solution realizes F's operation tables under
    some relabeling fixing 0 and 1."""
    if F.q != sol.order:
        raise OrderMismatchError(f"solution order {sol.order} vs field order {F.q}")
    add, mul = operation_code_tables(F)
    return match_against_tables(sol, add, mul)
