"""
Linear endofunctors, functor words and natural transformations.

A linear functor is given by its values on simples and extended additively:
``F(X)`` concatenates ``F(V_{X[a]})`` in positional order. Functor words are
small expression trees (``T(X ⊗ Y)``, ``T(∨T(X))``, ...) in numbered
variables; a natural transformation between two words is stored only at
tuples of simples and assembled at arbitrary objects through the
coordinate decompositions.
"""

from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple
import numpy as np
from app.exceptions import ShapeError
from app.report import Report
from app.semicat import (
    UNIT,
    CategorySpec,
    Mor,
    Obj,
    dual_mor,
    dual_obj,
    identity,
    random_morphism,
    random_object,
    tensor,
    tensor_obj,
)


class LinearFunctor:
    """A linear endofunctor given on simples."""

    def __init__(self, cat: CategorySpec, on_simple: Sequence[Obj], name: str = "F"):
        if len(on_simple) != cat.n_simples:
            raise ShapeError(f"{name} must be given on all {cat.n_simples} simples")
        self.cat = cat
        self.on_simple: Tuple[Obj, ...] = tuple(tuple(int(x) for x in o) for o in on_simple)
        self.name = name

    def obj(self, X: Obj) -> Obj:
        out: Tuple[int, ...] = ()
        for x in X:
            out += self.on_simple[x]
        return out

    def offsets(self, X: Obj) -> List[int]:
        result, pos = [], 0
        for x in X:
            result.append(pos)
            pos += len(self.on_simple[x])
        return result

    def mor(self, f: Mor) -> Mor:
        """Block matrix with ``f[b, a] · id_{F(V_i)}`` in block ``(b, a)``."""
        src_off, dst_off = self.offsets(f.src), self.offsets(f.dst)
        out = {}
        for (r, c), v in f.entries.items():
            width = len(self.on_simple[f.src[c]])
            for k in range(width):
                out[(dst_off[r] + k, src_off[c] + k)] = v
        return Mor(self.cat, self.obj(f.src), self.obj(f.dst), out, check=False)

    def __call__(self, x):
        if isinstance(x, Word):
            return Ap(self, x)
        if isinstance(x, Mor):
            return self.mor(x)
        return self.obj(tuple(x))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearFunctor):
            return NotImplemented
        return self.cat == other.cat and self.on_simple == other.on_simple

    def __hash__(self) -> int:
        return hash((self.cat, self.on_simple))

    def __repr__(self) -> str:
        return f"LinearFunctor({self.name})"


def identity_functor(cat: CategorySpec) -> LinearFunctor:
    return LinearFunctor(cat, [(i,) for i in cat.simples], "1")


def compose_functors(F: LinearFunctor, G: LinearFunctor, name: Optional[str] = None) -> LinearFunctor:
    """The composite ``F ∘ G``."""
    return LinearFunctor(F.cat, [F.obj(G.on_simple[i]) for i in F.cat.simples],
                         name or f"{F.name}{G.name}")


# functor words

class Word:
    """Base class of functor words."""


@dataclass(frozen=True)
class Var(Word):
    index: int


@dataclass(frozen=True)
class Unit(Word):
    pass


@dataclass(frozen=True)
class Const(Word):
    obj: Obj


@dataclass(frozen=True)
class Ap(Word):
    functor: LinearFunctor
    arg: Word


@dataclass(frozen=True)
class Ten(Word):
    left: Word
    right: Word


@dataclass(frozen=True)
class LDual(Word):
    arg: Word


@dataclass(frozen=True)
class RDual(Word):
    arg: Word


X0, X1, X2 = Var(0), Var(1), Var(2)


def ten(*words: Word) -> Word:
    result = words[0]
    for w in words[1:]:
        result = Ten(result, w)
    return result


def evaluate(cat: CategorySpec, word: Word, objs: Sequence[Obj]) -> Obj:
    """The object a word takes at the given objects."""
    return _Embedder(cat, objs).big(word)


def variances(word: Word, sign: int = 1, acc: Optional[Dict[int, List[int]]] = None) -> Dict[int, List[int]]:
    """Signs (+1 covariant, -1 contravariant) of every variable occurrence."""
    acc = {} if acc is None else acc
    if isinstance(word, Var):
        acc.setdefault(word.index, []).append(sign)
    elif isinstance(word, Ap):
        variances(word.arg, sign, acc)
    elif isinstance(word, Ten):
        variances(word.left, sign, acc)
        variances(word.right, sign, acc)
    elif isinstance(word, (LDual, RDual)):
        variances(word.arg, -sign, acc)
    return acc


class _Embedder:
    """Positions of a word evaluated at simples inside the word at objects."""

    def __init__(self, cat: CategorySpec, objs: Sequence[Obj]):
        self.cat = cat
        self.objs = [tuple(o) for o in objs]
        self._big: Dict[int, Obj] = {}
        self._offsets: Dict[Tuple[int, int], List[int]] = {}

    def big(self, word: Word) -> Obj:
        key = id(word)
        if key not in self._big:
            self._big[key] = self._compute_big(word)
        return self._big[key]

    def _compute_big(self, word: Word) -> Obj:
        if isinstance(word, Var):
            return self.objs[word.index]
        if isinstance(word, Unit):
            return UNIT
        if isinstance(word, Const):
            return tuple(word.obj)
        if isinstance(word, Ap):
            return word.functor.obj(self.big(word.arg))
        if isinstance(word, Ten):
            return tensor_obj(self.cat, self.big(word.left), self.big(word.right))
        return dual_obj(self.cat, self.big(word.arg))

    def offsets(self, word: Ap) -> List[int]:
        key = (id(word), 0)
        if key not in self._offsets:
            self._offsets[key] = word.functor.offsets(self.big(word.arg))
        return self._offsets[key]

    def embed(self, word: Word, choice: Sequence[int]) -> Tuple[Obj, List[int]]:
        """Return the word at the chosen simples and its position injection."""
        if isinstance(word, Var):
            k = word.index
            return (self.objs[k][choice[k]],), [choice[k]]
        if isinstance(word, Unit):
            return UNIT, [0]
        if isinstance(word, Const):
            return tuple(word.obj), list(range(len(word.obj)))
        if isinstance(word, Ten):
            s1, p1 = self.embed(word.left, choice)
            s2, p2 = self.embed(word.right, choice)
            n2 = len(self.big(word.right))
            return (tensor_obj(self.cat, s1, s2),
                    [i1 * n2 + i2 for i1 in p1 for i2 in p2])
        if isinstance(word, Ap):
            s, p = self.embed(word.arg, choice)
            F = word.functor
            offs = self.offsets(word)
            inj = []
            for k, label in enumerate(s):
                base = offs[p[k]]
                inj.extend(base + t for t in range(len(F.on_simple[label])))
            return F.obj(s), inj
        s, p = self.embed(word.arg, choice)
        nb = len(self.big(word.arg))
        ns = len(s)
        return dual_obj(self.cat, s), [nb - 1 - p[ns - 1 - j] for j in range(ns)]


class NatTrans:
    """
    A natural transformation between two functor words.

    ``component`` computes the morphism at a tuple of simple indices; values
    are cached and checked against the shapes the words dictate.
    """

    def __init__(self, cat: CategorySpec, src: Word, dst: Word, arity: int,
                 component: Callable[..., Mor], name: str = "nu"):
        self.cat = cat
        self.src = src
        self.dst = dst
        self.arity = arity
        self.name = name
        self._component = component
        self._cache: Dict[Tuple[int, ...], Mor] = {}
        src_var, dst_var = variances(src), variances(dst)
        for k in set(src_var) | set(dst_var):
            signs = set(src_var.get(k, [])) | set(dst_var.get(k, []))
            if len(signs) > 1:
                raise ShapeError(f"{name}: variable {k} occurs with mixed variance")
            if len(src_var.get(k, [])) > 1 or len(dst_var.get(k, [])) > 1:
                raise ShapeError(f"{name}: variable {k} occurs more than once in a word")
            if k >= arity:
                raise ShapeError(f"{name}: variable {k} exceeds arity {arity}")
        self.covariant = {k: (src_var.get(k) or dst_var.get(k))[0] > 0
                          for k in set(src_var) | set(dst_var)}

    def at(self, *simples: int) -> Mor:
        """The component at a tuple of simple indices."""
        if len(simples) != self.arity:
            raise ShapeError(f"{self.name} expects {self.arity} simples, got {len(simples)}")
        key = tuple(int(s) for s in simples)
        if key not in self._cache:
            comp = self._component(*key)
            objs = [(s,) for s in key]
            want_src = evaluate(self.cat, self.src, objs)
            want_dst = evaluate(self.cat, self.dst, objs)
            if comp.src != want_src or comp.dst != want_dst:
                raise ShapeError(
                    f"{self.name}{key}: got {comp.src} -> {comp.dst}, "
                    f"expected {want_src} -> {want_dst}"
                )
            self._cache[key] = comp
        return self._cache[key]

    def __call__(self, *objs: Obj) -> Mor:
        return nat_component(self, *objs)

    def __repr__(self) -> str:
        return f"NatTrans({self.name}, arity={self.arity})"


def nat_component(nu: NatTrans, *objs: Obj) -> Mor:
    """
    The component of ``nu`` at arbitrary objects.

    Raises:
        ShapeError: on arity mismatch.
    """
    if len(objs) != nu.arity:
        raise ShapeError(f"{nu.name} expects {nu.arity} objects, got {len(objs)}")
    objs = [tuple(o) for o in objs]
    if all(len(o) == 1 for o in objs):
        return nu.at(*[o[0] for o in objs])
    emb = _Embedder(nu.cat, objs)
    src_big, dst_big = emb.big(nu.src), emb.big(nu.dst)
    field = nu.cat.field
    out = {}
    for choice in product(*[range(len(o)) for o in objs]):
        simples = [objs[k][choice[k]] for k in range(len(objs))]
        comp = nu.at(*simples)
        if not comp.entries:
            continue
        _, src_inj = emb.embed(nu.src, choice)
        _, dst_inj = emb.embed(nu.dst, choice)
        for (r, c), v in comp.entries.items():
            key = (dst_inj[r], src_inj[c])
            out[key] = field.add(out.get(key, field.zero), v)
    return Mor(nu.cat, src_big, dst_big, out, check=False)


def word_mor(cat: CategorySpec, word: Word, mors: Sequence[Mor]) -> Mor:
    """Apply a word to morphisms; contravariant occurrences take duals."""
    if isinstance(word, Var):
        return mors[word.index]
    if isinstance(word, Unit):
        return identity(cat, UNIT)
    if isinstance(word, Const):
        return identity(cat, tuple(word.obj))
    if isinstance(word, Ap):
        return word.functor.mor(word_mor(cat, word.arg, mors))
    if isinstance(word, Ten):
        return tensor(word_mor(cat, word.left, mors), word_mor(cat, word.right, mors))
    return dual_mor(word_mor(cat, word.arg, mors), "left" if isinstance(word, LDual) else "right")


def from_table(cat: CategorySpec, src: Word, dst: Word, arity: int,
               table: Dict[Tuple[int, ...], Mor], name: str = "nu") -> NatTrans:
    """A natural transformation with explicitly listed simple components."""
    def component(*key):
        try:
            return table[tuple(key)]
        except KeyError:
            raise ShapeError(f"{name} has no component at {tuple(key)}")
    return NatTrans(cat, src, dst, arity, component, name)


def check_naturality(nu: NatTrans, rng: np.random.Generator, samples: int = 3,
                     length: int = 2, report: Optional[Report] = None) -> Report:
    """
    Naturality squares on random morphisms.

    For each variable a morphism ``f_k: A_k → B_k`` is drawn; covariant
    variables are evaluated at ``A`` on the low side, contravariant ones
    at ``B``.
    """
    report = report if report is not None else Report(f"naturality:{nu.name}")
    cat = nu.cat
    for _ in range(samples):
        A = [random_object(cat, rng, length) for _ in range(nu.arity)]
        B = [random_object(cat, rng, length) for _ in range(nu.arity)]
        fs = [random_morphism(cat, rng, A[k], B[k]) for k in range(nu.arity)]
        low = [A[k] if nu.covariant.get(k, True) else B[k] for k in range(nu.arity)]
        high = [B[k] if nu.covariant.get(k, True) else A[k] for k in range(nu.arity)]
        lhs = nat_component(nu, *high) @ word_mor(cat, nu.src, fs)
        rhs = word_mor(cat, nu.dst, fs) @ nat_component(nu, *low)
        report.compare(f"{nu.name}_natural", tuple(low), lhs, rhs)
    return report
