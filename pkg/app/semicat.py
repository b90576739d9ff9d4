"""
Strict finite semisimple linear categories with chosen decompositions.

Objects are tuples of simple indices; the unit object is ``(0,)`` and the
empty tuple is the zero object. Tensor products are enumerated
lexicographically: position ``a * len(Y) + b`` of ``X ⊗ Y`` carries the
simple ``tensor_table[X[a]][Y[b]]``. Morphisms are sparse matrices whose
entry ``(row, col)`` may be nonzero only when ``dst[row] == src[col]``.
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union
import numpy as np
from app.exceptions import CategoryError, NotBraidedError, ShapeError, SpecParseError
from app.report import Report
from app.scalars import FieldSpec, Raw, Scalar

Obj = Tuple[int, ...]
UNIT: Obj = (0,)


@dataclass(frozen=True)
class CategorySpec:
    """Structure tables of a strict pointed (or trivial) category instance."""

    field: FieldSpec
    tensor_table: Tuple[Tuple[int, ...], ...]
    dual_table: Tuple[int, ...]
    braiding_table: Optional[Tuple[Tuple[Raw, ...], ...]] = None
    name: str = "category"
    kind: str = "vec_g"

    @property
    def n_simples(self) -> int:
        return len(self.dual_table)

    @property
    def is_braided(self) -> bool:
        return self.braiding_table is not None

    @property
    def simples(self) -> range:
        return range(self.n_simples)

    def chi(self, i: int, j: int) -> Raw:
        if self.braiding_table is None:
            raise NotBraidedError(f"{self.name} carries no braiding")
        return self.braiding_table[i][j]

    def is_symmetric(self) -> bool:
        """Whether the double braiding is trivial on all simples."""
        f = self.field
        return all(
            f.mul(self.chi(i, j), self.chi(j, i)) == f.one
            for i in self.simples for j in self.simples
        )

    def __repr__(self) -> str:
        return f"CategorySpec({self.name}, {self.n_simples} simples)"


def inverse_table(cayley: Sequence[Sequence[int]], strict: bool = True) -> Tuple[int, ...]:
    """
    Inverse of each element of a group given by its Cayley table.

    With ``strict`` unset an element without a unique inverse gets its first
    right inverse, or itself, and the table is left for ``check_category``.
    """
    inv = []
    for i, row in enumerate(cayley):
        partners = [j for j, x in enumerate(row) if x == 0]
        if len(partners) != 1:
            if strict:
                raise CategoryError(f"Element {i} has no unique inverse")
            partners = partners[:1] or [i]
        inv.append(partners[0])
    return tuple(inv)


def vec_g_category(cayley: Sequence[Sequence[int]], field: FieldSpec = None,
                   bicharacter: Optional[Sequence[Sequence]] = None,
                   name: str = "vec_g") -> CategorySpec:
    """Vec_G for a group given by its Cayley table, optionally braided."""
    field = field or FieldSpec.rationals()
    table = tuple(tuple(int(x) for x in row) for row in cayley)
    braiding = None
    if bicharacter is not None:
        braiding = tuple(tuple(field.reduce(x) for x in row) for row in bicharacter)
    return CategorySpec(field, table, inverse_table(table, strict=False), braiding, name, "vec_g")


def vec_category(field: FieldSpec = None) -> CategorySpec:
    """Finite-dimensional vector spaces: one simple, symmetric braiding."""
    field = field or FieldSpec.rationals()
    return CategorySpec(field, ((0,),), (0,), ((field.one,),), "vec", "vec")


class Mor:
    """A graded sparse matrix between two objects of a category."""

    __slots__ = ("cat", "src", "dst", "entries")

    def __init__(self, cat: CategorySpec, src: Obj, dst: Obj,
                 entries: Optional[Dict[Tuple[int, int], Raw]] = None, check: bool = True):
        self.cat = cat
        self.src = tuple(src)
        self.dst = tuple(dst)
        clean = {}
        if entries:
            for key, value in entries.items():
                if value != 0:
                    clean[key] = value
        if check:
            for (r, c) in clean:
                if not (0 <= r < len(self.dst) and 0 <= c < len(self.src)):
                    raise ShapeError(f"Entry ({r}, {c}) outside {len(self.dst)}x{len(self.src)}")
                if self.dst[r] != self.src[c]:
                    raise ShapeError(
                        f"Entry ({r}, {c}) links simple {self.src[c]} to {self.dst[r]}"
                    )
        self.entries = clean

    @property
    def field(self) -> FieldSpec:
        return self.cat.field

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.dst), len(self.src)

    def __matmul__(self, other: 'Mor') -> 'Mor':
        return compose(self, other)

    def __add__(self, other: 'Mor') -> 'Mor':
        if self.src != other.src or self.dst != other.dst:
            raise ShapeError("Cannot add morphisms of different shapes")
        f = self.field
        out = dict(self.entries)
        for key, value in other.entries.items():
            out[key] = f.add(out.get(key, f.zero), value)
        return Mor(self.cat, self.src, self.dst, out, check=False)

    def __neg__(self) -> 'Mor':
        return self.scale(self.field.neg(self.field.one))

    def __sub__(self, other: 'Mor') -> 'Mor':
        return self + (-other)

    def scale(self, factor) -> 'Mor':
        f = self.field
        factor = factor.value if isinstance(factor, Scalar) else f.reduce(factor)
        return Mor(self.cat, self.src, self.dst,
                   {k: f.mul(v, factor) for k, v in self.entries.items()}, check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mor):
            return NotImplemented
        return self.src == other.src and self.dst == other.dst and self.entries == other.entries

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.entries

    def entry(self, r: int, c: int) -> Scalar:
        return Scalar(self.field, self.entries.get((r, c), self.field.zero))

    def first_mismatch(self, other: 'Mor') -> Optional[str]:
        """Describe the first differing entry in row-major order, or None."""
        if self.src != other.src or self.dst != other.dst:
            return f"shape {self.shape} vs {other.shape}"
        f = self.field
        keys = sorted(set(self.entries) | set(other.entries))
        for key in keys:
            a = self.entries.get(key, f.zero)
            b = other.entries.get(key, f.zero)
            if a != b:
                return f"({key[0]},{key[1]}): {f.render(a)} != {f.render(b)}"
        return None

    def sorted_entries(self) -> List[Tuple[int, int, Raw]]:
        return [(r, c, v) for (r, c), v in sorted(self.entries.items())]

    def __repr__(self) -> str:
        return f"Mor({self.src} -> {self.dst}, nnz={len(self.entries)})"


def identity(cat: CategorySpec, X: Obj) -> Mor:
    one = cat.field.one
    return Mor(cat, X, X, {(k, k): one for k in range(len(X))}, check=False)


def zero_mor(cat: CategorySpec, X: Obj, Y: Obj) -> Mor:
    return Mor(cat, X, Y, {}, check=False)


def compose(g: Mor, f: Mor) -> Mor:
    """The composite ``g ∘ f``."""
    if f.dst != g.src:
        raise ShapeError(f"Cannot compose {g!r} after {f!r}")
    field = f.field
    by_col: Dict[int, List[Tuple[int, Raw]]] = {}
    for (r, c), v in g.entries.items():
        by_col.setdefault(c, []).append((r, v))
    out: Dict[Tuple[int, int], Raw] = {}
    if field.kind == "Q":
        for (k, c), v in f.entries.items():
            for r, w in by_col.get(k, ()):
                key = (r, c)
                out[key] = out.get(key, 0) + w * v
    else:
        p = field.modulus
        for (k, c), v in f.entries.items():
            for r, w in by_col.get(k, ()):
                key = (r, c)
                out[key] = (out.get(key, 0) + w * v) % p
    return Mor(f.cat, f.src, g.dst, out, check=False)


def compose_all(*mors: Mor) -> Mor:
    """``compose_all(h, g, f) == h ∘ g ∘ f``."""
    result = mors[-1]
    for m in reversed(mors[:-1]):
        result = compose(m, result)
    return result


def tensor_obj(cat: CategorySpec, X: Obj, Y: Obj) -> Obj:
    table = cat.tensor_table
    return tuple(table[a][b] for a in X for b in Y)


def _as_mor(cat: CategorySpec, x: Union[Obj, Mor]) -> Mor:
    return x if isinstance(x, Mor) else identity(cat, tuple(x))


def tensor(x: Union[Obj, Mor], y: Union[Obj, Mor], cat: CategorySpec = None):
    """
    Monoidal product of two objects or two morphisms.

    An object next to a morphism stands for its identity.
    """
    if isinstance(x, Mor) or isinstance(y, Mor):
        cat = x.cat if isinstance(x, Mor) else y.cat
        f, g = _as_mor(cat, x), _as_mor(cat, y)
        if f.cat != g.cat:
            raise ShapeError("Tensor of morphisms from different categories")
        field = cat.field
        n_src, n_dst = len(g.src), len(g.dst)
        out = {}
        for (r1, c1), v1 in f.entries.items():
            for (r2, c2), v2 in g.entries.items():
                out[(r1 * n_dst + r2, c1 * n_src + c2)] = field.mul(v1, v2)
        return Mor(cat, tensor_obj(cat, f.src, g.src), tensor_obj(cat, f.dst, g.dst),
                   out, check=False)
    if cat is None:
        raise ShapeError("Tensor of objects needs the category")
    return tensor_obj(cat, tuple(x), tuple(y))


def tensor_all(cat: CategorySpec, *items):
    """Left-to-right tensor of several objects or morphisms."""
    result = items[0]
    for item in items[1:]:
        result = tensor(result, item, cat)
    return result


def dual_obj(cat: CategorySpec, X: Obj) -> Obj:
    """Left and right dual share one object: reversed images under dual_table."""
    return tuple(cat.dual_table[x] for x in reversed(X))


def ev(cat: CategorySpec, X: Obj) -> Mor:
    """Left evaluation ∨X ⊗ X → 1."""
    n = len(X)
    one = cat.field.one
    return Mor(cat, tensor_obj(cat, dual_obj(cat, X), X), UNIT,
               {(0, (n - 1 - a) * n + a): one for a in range(n)})


def coev(cat: CategorySpec, X: Obj) -> Mor:
    """Left coevaluation 1 → X ⊗ ∨X."""
    n = len(X)
    one = cat.field.one
    return Mor(cat, UNIT, tensor_obj(cat, X, dual_obj(cat, X)),
               {(a * n + (n - 1 - a), 0): one for a in range(n)})


def ev_right(cat: CategorySpec, X: Obj) -> Mor:
    """Right evaluation X ⊗ X∨ → 1."""
    n = len(X)
    one = cat.field.one
    return Mor(cat, tensor_obj(cat, X, dual_obj(cat, X)), UNIT,
               {(0, a * n + (n - 1 - a)): one for a in range(n)})


def coev_right(cat: CategorySpec, X: Obj) -> Mor:
    """Right coevaluation 1 → X∨ ⊗ X."""
    n = len(X)
    one = cat.field.one
    return Mor(cat, UNIT, tensor_obj(cat, dual_obj(cat, X), X),
               {((n - 1 - a) * n + a, 0): one for a in range(n)})


def duality_data(cat: CategorySpec, X: Obj, side: str = "left") -> Tuple[Obj, Mor, Mor]:
    """Return ``(dual, ev, coev)`` for the requested side."""
    if side == "left":
        return dual_obj(cat, X), ev(cat, X), coev(cat, X)
    if side == "right":
        return dual_obj(cat, X), ev_right(cat, X), coev_right(cat, X)
    raise CategoryError(f"Unknown duality side: {side}")


def dual_mor(f: Mor, side: str = "left") -> Mor:
    """
    Dual of ``f: X → Y``, a morphism ``dual(Y) → dual(X)``.

    With unit duality scalars both sides give the same matrix.
    """
    if side not in ("left", "right"):
        raise CategoryError(f"Unknown duality side: {side}")
    cat = f.cat
    n_x, n_y = len(f.src), len(f.dst)
    out = {(n_x - 1 - c, n_y - 1 - r): v for (r, c), v in f.entries.items()}
    return Mor(cat, dual_obj(cat, f.dst), dual_obj(cat, f.src), out, check=False)


def dual_tensor_iso(cat: CategorySpec, X: Obj, Y: Obj) -> Mor:
    """The permutation ∨Y ⊗ ∨X → ∨(X ⊗ Y); it also serves right duals."""
    n, m = len(X), len(Y)
    total = n * m
    one = cat.field.one
    out = {}
    for jb in range(m):
        for ja in range(n):
            row = total - 1 - ((n - 1 - ja) * m + (m - 1 - jb))
            out[(row, jb * n + ja)] = one
    src = tensor_obj(cat, dual_obj(cat, Y), dual_obj(cat, X))
    return Mor(cat, src, dual_obj(cat, tensor_obj(cat, X, Y)), out)


def dual_tensor_iso_inv(cat: CategorySpec, X: Obj, Y: Obj) -> Mor:
    """Inverse of :func:`dual_tensor_iso`."""
    d = dual_tensor_iso(cat, X, Y)
    return Mor(cat, d.dst, d.src, {(c, r): v for (r, c), v in d.entries.items()}, check=False)


def braid(cat: CategorySpec, X: Obj, Y: Obj, inverse: bool = False) -> Mor:
    """
    Braiding ``X ⊗ Y → Y ⊗ X``.

    With ``inverse`` set, the morphism of the same shape inverse to the
    braiding of ``Y`` with ``X``.
    """
    if not cat.is_braided:
        raise NotBraidedError(f"{cat.name} carries no braiding")
    field = cat.field
    nx, ny = len(X), len(Y)
    out = {}
    for a in range(nx):
        for b in range(ny):
            if inverse:
                value = field.inv(cat.chi(Y[b], X[a]))
            else:
                value = cat.chi(X[a], Y[b])
            out[(b * nx + a, a * ny + b)] = value
    return Mor(cat, tensor_obj(cat, X, Y), tensor_obj(cat, Y, X), out, check=False)


def tensor_permutation(cat: CategorySpec, factors: Sequence[Obj], order: Sequence[int]) -> Mor:
    """
    Plain reordering of tensor factors with unit scalars.

    Only meaningful on symmetric instances with trivial braiding scalars.
    """
    sizes = [len(F) for F in factors]
    src = UNIT
    for F in factors:
        src = tensor_obj(cat, src, F)
    dst = UNIT
    for k in order:
        dst = tensor_obj(cat, dst, factors[k])
    one = cat.field.one
    out = {}
    for multi in product(*[range(s) for s in sizes]):
        col = 0
        for k, idx in enumerate(multi):
            col = col * sizes[k] + idx
        row = 0
        for k in order:
            row = row * sizes[k] + multi[k]
        out[(row, col)] = one
    return Mor(cat, src, dst, out)


@dataclass
class Decomposition:
    """Coordinate projections and injections of an object, grouped by simple."""

    obj: Obj
    multiplicity: Dict[int, int]
    positions: Dict[Tuple[int, int], int]
    p: Dict[Tuple[int, int], Mor]
    q: Dict[Tuple[int, int], Mor]

    def keys(self) -> List[Tuple[int, int]]:
        return sorted(self.p)


def decompose(cat: CategorySpec, X: Obj) -> Decomposition:
    """Split ``X`` into its simple summands in positional order."""
    one = cat.field.one
    mult: Dict[int, int] = {}
    positions, p, q = {}, {}, {}
    for pos, i in enumerate(X):
        alpha = mult.get(i, 0)
        mult[i] = alpha + 1
        positions[(i, alpha)] = pos
        p[(i, alpha)] = Mor(cat, X, (i,), {(0, pos): one}, check=False)
        q[(i, alpha)] = Mor(cat, (i,), X, {(pos, 0): one}, check=False)
    return Decomposition(tuple(X), mult, positions, p, q)


def random_object(cat: CategorySpec, rng: np.random.Generator, length: int) -> Obj:
    return tuple(int(x) for x in rng.integers(0, cat.n_simples, size=length))


def random_morphism(cat: CategorySpec, rng: np.random.Generator, X: Obj, Y: Obj) -> Mor:
    """A graded morphism with small random integer entries."""
    out = {}
    for r, y in enumerate(Y):
        for c, x in enumerate(X):
            if x == y:
                value = int(rng.integers(-2, 3))
                if value:
                    out[(r, c)] = cat.field.reduce(value)
    return Mor(cat, X, Y, out, check=False)


def all_objects(cat: CategorySpec, max_len: int) -> Iterable[Obj]:
    for length in range(1, max_len + 1):
        for obj in product(cat.simples, repeat=length):
            yield tuple(obj)


def mor_to_dump(f: Mor) -> dict:
    """Serialize a morphism to the shared JSON dump format."""
    render = f.field.render
    return {
        "src": list(f.src),
        "dst": list(f.dst),
        "entries": [[r, c, render(v)] for r, c, v in f.sorted_entries()],
    }


def mor_from_dump(cat: CategorySpec, data: dict) -> Mor:
    """Parse a morphism dump; grading is validated."""
    try:
        src = tuple(int(x) for x in data["src"])
        dst = tuple(int(x) for x in data["dst"])
        entries = {(int(r), int(c)): cat.field.parse(v) for r, c, v in data["entries"]}
    except (KeyError, TypeError, ValueError) as e:
        raise SpecParseError(f"Malformed morphism dump: {e}")
    return Mor(cat, src, dst, entries)


def check_category(cat: CategorySpec, rng: Optional[np.random.Generator] = None,
                   samples: int = 5, max_len: int = 4) -> Report:
    """
    Check the structure tables and the duality and braiding identities.

    Table laws are checked exhaustively; zig-zags on every object up to
    ``max_len``; hexagons, naturality and the interchange law on ``samples``
    seeded random instances.
    """
    report = Report(f"check-category:{cat.name}")
    report.note("check_category")
    rng = rng if rng is not None else np.random.default_rng(0)
    n = cat.n_simples
    table = cat.tensor_table
    simples = list(cat.simples)

    closed = all(len(row) == n and all(0 <= x < n for x in row) for row in table)
    report.expect("tensor_closed", "table", closed and len(table) == n,
                  "tensor table is not an n x n table of simple indices")
    if not closed or len(table) != n:
        return report

    for i, j, k in product(simples, repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            report.expect("tensor_assoc", (i, j, k), False,
                          f"{table[table[i][j]][k]} != {table[i][table[j][k]]}")
            break
    else:
        report.expect("tensor_assoc", "all", True)
    report.expect("tensor_unit", "all",
                  all(table[0][i] == i and table[i][0] == i for i in simples),
                  "0 is not a two-sided unit")

    duals = cat.dual_table
    involutive = all(duals[duals[i]] == i for i in simples)
    inverses = all(table[i][duals[i]] == 0 and table[duals[i]][i] == 0 for i in simples)
    report.expect("dual_involutive", "all", involutive, "i** != i")
    report.expect("dual_unit", "all", inverses, "i ⊗ i* is not the unit")
    if not (involutive and inverses):
        return report

    for X in all_objects(cat, max_len):
        dX = dual_obj(cat, X)
        zig = compose(tensor(X, ev(cat, X), cat), tensor(coev(cat, X), X, cat))
        zag = compose(tensor(ev(cat, X), dX, cat), tensor(dX, coev(cat, X), cat))
        rzig = compose(tensor(ev_right(cat, X), X, cat), tensor(X, coev_right(cat, X), cat))
        rzag = compose(tensor(dX, ev_right(cat, X), cat), tensor(coev_right(cat, X), dX, cat))
        for check_id, lhs, obj in (("zigzag_left", zig, X), ("zagzig_left", zag, dX),
                                   ("zigzag_right", rzig, X), ("zagzig_right", rzag, dX)):
            if lhs != identity(cat, obj):
                report.compare(check_id, X, lhs, identity(cat, obj))
    if not report.failures:
        report.expect("zigzags", f"len<={max_len}", True)

    for _ in range(samples):
        X, Y = random_object(cat, rng, 2), random_object(cat, rng, 2)
        X2, Y2 = random_object(cat, rng, 2), random_object(cat, rng, 1)
        g, f = random_morphism(cat, rng, X, X2), random_morphism(cat, rng, Y, Y2)
        report.compare("interchange", (X, Y), tensor(g, f),
                       compose(tensor(X2, f, cat), tensor(g, Y, cat)))
        dec = decompose(cat, X)
        total = zero_mor(cat, X, X)
        for key in dec.keys():
            total = total + compose(dec.q[key], dec.p[key])
            for other in dec.keys():
                expected = identity(cat, (key[0],)) if key == other else None
                if key[0] == other[0]:
                    got = compose(dec.p[key], dec.q[other])
                    want = expected if expected is not None else zero_mor(cat, got.src, got.dst)
                    report.compare("decomposition_orthogonal", (X, key, other), got, want)
        report.compare("decomposition_complete", X, total, identity(cat, X))

    if not cat.is_braided:
        return report

    field = cat.field
    invertible = all(cat.chi(i, j) != field.zero for i in simples for j in simples)
    report.expect("braiding_nonzero", "all", invertible, "some braiding scalar vanishes")
    commutative = all(table[i][j] == table[j][i] for i in simples for j in simples)
    report.expect("braiding_graded", "all", commutative,
                  "braided instance needs a commutative tensor table")
    if not commutative:
        return report
    bichar = True
    for i, j, k in product(simples, repeat=3):
        left = cat.chi(table[i][j], k) == field.mul(cat.chi(i, k), cat.chi(j, k))
        right = cat.chi(i, table[j][k]) == field.mul(cat.chi(i, j), cat.chi(i, k))
        if not (left and right):
            report.expect("hexagon", (i, j, k), False, "braiding table is not a bicharacter")
            bichar = False
            break
    if bichar:
        report.expect("hexagon", "table", True)

    for _ in range(samples):
        X, Y, Z = (random_object(cat, rng, 2) for _ in range(3))
        XY, YZ = tensor_obj(cat, X, Y), tensor_obj(cat, Y, Z)
        report.compare("hexagon_left", (X, Y, Z), braid(cat, XY, Z),
                       compose(tensor(braid(cat, X, Z), Y, cat), tensor(X, braid(cat, Y, Z), cat)))
        report.compare("hexagon_right", (X, Y, Z), braid(cat, X, YZ),
                       compose(tensor(Y, braid(cat, X, Z), cat), tensor(braid(cat, X, Y), Z, cat)))
        if invertible:
            report.compare("braid_inverse", (X, Y),
                           compose(braid(cat, Y, X, inverse=True), braid(cat, X, Y)),
                           identity(cat, XY))
        X2, Y2 = random_object(cat, rng, 2), random_object(cat, rng, 1)
        f, g = random_morphism(cat, rng, X, X2), random_morphism(cat, rng, Y, Y2)
        report.compare("braid_natural", (X, Y), compose(braid(cat, X2, Y2), tensor(f, g)),
                       compose(tensor(g, f), braid(cat, X, Y)))
    return report
