"""
Exact linear-algebra kernels on graded morphisms.

Every morphism splits into independent blocks, one per simple label, so
inversion and solving run label by label.
"""

from typing import Dict, List, Sequence, Tuple
from app.exceptions import CategoryError, ShapeError
from app.scalars import FieldSpec, Raw
from app.semicat import (
    Mor,
    Obj,
    compose,
    coev,
    dual_obj,
    ev,
    tensor,
    tensor_obj,
)


def direct_sum(*objs: Obj) -> Obj:
    """Direct sum of objects: the concatenation of their summands."""
    out: Tuple[int, ...] = ()
    for X in objs:
        out += tuple(X)
    return out


def hconcat(mors: Sequence[Mor]) -> Mor:
    """The map ``⊕ src_k → dst`` restricting to ``mors[k]`` on summand k."""
    if not mors:
        raise ShapeError("hconcat needs at least one morphism")
    dst = mors[0].dst
    out = {}
    offset = 0
    for f in mors:
        if f.dst != dst:
            raise ShapeError("hconcat of morphisms with different targets")
        for (r, c), v in f.entries.items():
            out[(r, offset + c)] = v
        offset += len(f.src)
    return Mor(mors[0].cat, direct_sum(*[f.src for f in mors]), dst, out, check=False)


def vconcat(mors: Sequence[Mor]) -> Mor:
    """The map ``src → ⊕ dst_k`` whose k-th component is ``mors[k]``."""
    if not mors:
        raise ShapeError("vconcat needs at least one morphism")
    src = mors[0].src
    out = {}
    offset = 0
    for f in mors:
        if f.src != src:
            raise ShapeError("vconcat of morphisms with different sources")
        for (r, c), v in f.entries.items():
            out[(offset + r, c)] = v
        offset += len(f.dst)
    return Mor(mors[0].cat, src, direct_sum(*[f.dst for f in mors]), out, check=False)


def select_columns(f: Mor, cols: Sequence[int]) -> Mor:
    """Restrict ``f`` to the given source positions, in the given order."""
    where = {c: k for k, c in enumerate(cols)}
    out = {(r, where[c]): v for (r, c), v in f.entries.items() if c in where}
    return Mor(f.cat, tuple(f.src[c] for c in cols), f.dst, out, check=False)


def _label_positions(obj: Obj) -> Dict[int, List[int]]:
    groups: Dict[int, List[int]] = {}
    for pos, label in enumerate(obj):
        groups.setdefault(label, []).append(pos)
    return groups


def _invert_block(field: FieldSpec, rows: List[Dict[int, Raw]], n: int) -> List[Dict[int, Raw]]:
    """Gauss-Jordan inverse of an n×n sparse matrix given as row dicts."""
    work = [dict(row) for row in rows]
    inv = [{k: field.one} for k in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if work[r].get(col, field.zero) != field.zero:
                pivot = r
                break
        if pivot is None:
            raise CategoryError("Morphism is not invertible")
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = field.inv(work[col][col])
        work[col] = {k: field.mul(v, scale) for k, v in work[col].items()}
        inv[col] = {k: field.mul(v, scale) for k, v in inv[col].items()}
        for r in range(n):
            if r == col:
                continue
            factor = work[r].get(col, field.zero)
            if factor == field.zero:
                continue
            for k, v in work[col].items():
                value = field.sub(work[r].get(k, field.zero), field.mul(factor, v))
                if value == field.zero:
                    work[r].pop(k, None)
                else:
                    work[r][k] = value
            for k, v in inv[col].items():
                value = field.sub(inv[r].get(k, field.zero), field.mul(factor, v))
                if value == field.zero:
                    inv[r].pop(k, None)
                else:
                    inv[r][k] = value
    return inv


def _monomial_inverse(f: Mor):
    """Fast path for matrices with one entry in every row and column."""
    if len(f.entries) != len(f.src) or len(f.src) != len(f.dst):
        return None
    rows, cols = set(), set()
    for (r, c) in f.entries:
        rows.add(r)
        cols.add(c)
    if len(rows) != len(f.dst) or len(cols) != len(f.src):
        return None
    field = f.field
    out = {(c, r): field.inv(v) for (r, c), v in f.entries.items()}
    return Mor(f.cat, f.dst, f.src, out, check=False)


def inverse(f: Mor) -> Mor:
    """
    Exact inverse of a graded morphism.

    Raises:
        CategoryError: if some label block is not square or is singular.
    """
    fast = _monomial_inverse(f)
    if fast is not None:
        return fast
    field = f.field
    src_groups = _label_positions(f.src)
    dst_groups = _label_positions(f.dst)
    if {k: len(v) for k, v in src_groups.items()} != {k: len(v) for k, v in dst_groups.items()}:
        raise CategoryError(f"{f!r} has non-square label blocks")
    out = {}
    for label, cols in src_groups.items():
        rows = dst_groups[label]
        col_index = {c: k for k, c in enumerate(cols)}
        row_index = {r: k for k, r in enumerate(rows)}
        block = [dict() for _ in rows]
        for (r, c), v in f.entries.items():
            if r in row_index:
                block[row_index[r]][col_index[c]] = v
        inv = _invert_block(field, block, len(rows))
        for i, row in enumerate(inv):
            for j, v in row.items():
                out[(cols[i], rows[j])] = v
    return Mor(f.cat, f.dst, f.src, out, check=False)


def is_invertible(f: Mor) -> bool:
    """Whether ``f`` has a two-sided inverse, blockwise over matching simple labels."""
    try:
        inverse(f)
    except CategoryError:
        return False
    return True


def _independent_columns(field: FieldSpec, columns: Dict[int, Dict[int, Raw]],
                         order: Sequence[int], needed: int) -> List[int]:
    """Greedy choice of linearly independent columns, stopping at ``needed``."""
    basis: List[Tuple[int, Dict[int, Raw]]] = []
    chosen = []
    for c in order:
        vec = dict(columns.get(c, {}))
        for pivot, b in basis:
            factor = vec.get(pivot, field.zero)
            if factor == field.zero:
                continue
            for k, v in b.items():
                value = field.sub(vec.get(k, field.zero), field.mul(factor, v))
                if value == field.zero:
                    vec.pop(k, None)
                else:
                    vec[k] = value
        if not vec:
            continue
        pivot = min(vec)
        scale = field.inv(vec[pivot])
        basis.append((pivot, {k: field.mul(v, scale) for k, v in vec.items()}))
        chosen.append(c)
        if len(chosen) == needed:
            break
    return chosen


def solve_left(lhs: Mor, rhs: Mor) -> Mor:
    """
    The unique ``g`` with ``g ∘ lhs == rhs``.

    ``lhs`` must be surjective; the solution is checked against every
    column before it is returned.

    Raises:
        CategoryError: if ``lhs`` is not surjective or the system is inconsistent.
    """
    if lhs.src != rhs.src:
        raise ShapeError("solve_left needs equal sources")
    field = lhs.field
    columns: Dict[int, Dict[int, Raw]] = {}
    for (r, c), v in lhs.entries.items():
        columns.setdefault(c, {})[r] = v
    src_groups = _label_positions(lhs.src)
    dst_groups = _label_positions(lhs.dst)
    chosen: List[int] = []
    for label, rows in dst_groups.items():
        picked = _independent_columns(field, columns, src_groups.get(label, []), len(rows))
        if len(picked) != len(rows):
            raise CategoryError(f"Left factor is not surjective on label {label}")
        chosen.extend(picked)
    chosen.sort()
    g = compose(select_columns(rhs, chosen), inverse(select_columns(lhs, chosen)))
    if compose(g, lhs) != rhs:
        raise CategoryError("Linear system has no solution")
    return g


def bend(f: Mor, U: Obj, W: Obj) -> Mor:
    """``(ev_U ⊗ id_W)(id_∨U ⊗ f)`` for ``f: A → U ⊗ W``."""
    cat = f.cat
    if f.dst != tensor_obj(cat, U, W):
        raise ShapeError(f"bend: target of {f!r} is not U ⊗ W")
    return compose(tensor(ev(cat, U), W, cat), tensor(dual_obj(cat, U), f, cat))


def unbend(g: Mor, U: Obj, A: Obj) -> Mor:
    """Inverse of :func:`bend`: ``(id_U ⊗ g)(coev_U ⊗ id_A)``."""
    cat = g.cat
    return compose(tensor(U, g, cat), tensor(coev(cat, U), A, cat))


def factor_through(dels: Sequence[Mor], xis: Sequence[Mor], U_list: Sequence[Obj],
                   Z: Obj, W: Obj) -> Mor:
    """
    The unique ``g: Z → W`` with ``(id_{U_k} ⊗ g) ∘ dels[k] == xis[k]`` for all k.

    The family ``dels`` must be jointly universal: bending it produces a
    surjection onto ``Z``.
    """
    lhs = hconcat([bend(d, U, Z) for d, U in zip(dels, U_list)])
    rhs = hconcat([bend(x, U, W) for x, U in zip(xis, U_list)])
    return solve_left(lhs, rhs)


def solve_linear_map(src: Obj, dst: Obj, apply, target: Mor) -> Mor:
    """
    The unique graded ``g: src → dst`` with ``apply(g) == target``.

    ``apply`` must be linear in ``g``. The system is assembled column by
    column from elementary morphisms and reduced exactly.

    Raises:
        CategoryError: if the solution is not unique or does not exist.
    """
    cat = target.cat
    field = cat.field
    unknowns = [(r, c) for r in range(len(dst)) for c in range(len(src)) if dst[r] == src[c]]
    columns = []
    for key in unknowns:
        image = apply(Mor(cat, src, dst, {key: field.one}, check=False))
        columns.append(dict(image.entries))
    # reduced row echelon over the columns, carrying the right-hand side
    rows: Dict = {}
    for j, col in enumerate(columns):
        for key, v in col.items():
            rows.setdefault(key, {})[j] = v
    rhs = dict(target.entries)
    for key in rhs:
        rows.setdefault(key, {})
    work = [(dict(row), rhs.get(key, field.zero)) for key, row in rows.items()]
    solution: Dict[int, Raw] = {}
    pivot_rows: List[Tuple[int, Dict[int, Raw], Raw]] = []
    for row, b in work:
        row = dict(row)
        for pcol, prow, pb in pivot_rows:
            factor = row.get(pcol, field.zero)
            if factor == field.zero:
                continue
            for k, v in prow.items():
                value = field.sub(row.get(k, field.zero), field.mul(factor, v))
                if value == field.zero:
                    row.pop(k, None)
                else:
                    row[k] = value
            b = field.sub(b, field.mul(factor, pb))
        if not row:
            if b != field.zero:
                raise CategoryError("Linear system has no solution")
            continue
        pcol = min(row)
        scale = field.inv(row[pcol])
        row = {k: field.mul(v, scale) for k, v in row.items()}
        b = field.mul(b, scale)
        for idx, (qcol, qrow, qb) in enumerate(pivot_rows):
            factor = qrow.get(pcol, field.zero)
            if factor == field.zero:
                continue
            for k, v in row.items():
                value = field.sub(qrow.get(k, field.zero), field.mul(factor, v))
                if value == field.zero:
                    qrow.pop(k, None)
                else:
                    qrow[k] = value
            pivot_rows[idx] = (qcol, qrow, field.sub(qb, field.mul(factor, b)))
        pivot_rows.append((pcol, row, b))
    if len(pivot_rows) != len(unknowns):
        raise CategoryError("Linear system does not determine a unique solution")
    for pcol, _, b in pivot_rows:
        solution[pcol] = b
    g = Mor(cat, src, dst, {unknowns[j]: v for j, v in solution.items()}, check=False)
    if apply(g) != target:
        raise CategoryError("Linear system has no solution")
    return g
