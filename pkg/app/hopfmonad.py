"""
Hopf monads on finite semisimple instances, their modules and R-matrices.

A Hopf monad stores its structure transformations at simples only; the
components at arbitrary objects come from :func:`nat_component`.
"""

from dataclasses import dataclass
from itertools import islice, product
from typing import Callable, Iterable, Optional, Tuple
import numpy as np
from app.exceptions import ModuleValidationError, ShapeError
from app.functors import (
    X0,
    X1,
    Ap,
    LDual,
    LinearFunctor,
    NatTrans,
    RDual,
    Ten,
    identity_functor,
    nat_component,
)
from app.hopfalg import HopfAlgebra
from app.monadal_config import config
from app.report import Report, location_of
from app.semicat import (
    UNIT,
    CategorySpec,
    Mor,
    Obj,
    coev,
    coev_right,
    compose_all,
    dual_mor,
    dual_obj,
    dual_tensor_iso_inv,
    ev,
    ev_right,
    identity,
    random_object,
    tensor,
    tensor_all,
    tensor_obj,
)


class HopfMonad:
    """
    A Hopf monad: a linear functor with monad, comonoidal and antipode data.

    Attributes:
        T: the underlying linear functor
        mu: ``TT(X) → T(X)``
        eta: ``X → T(X)``
        T2: ``T(X ⊗ Y) → T(X) ⊗ T(Y)``
        T0: ``T(1) → 1``
        sl: left antipode ``T(∨T(X)) → ∨X``
        sr: right antipode ``T(T(X)^∨) → X^∨``
    """

    def __init__(self, T: LinearFunctor, mu: NatTrans, eta: NatTrans, T2: NatTrans,
                 T0: Mor, sl: NatTrans, sr: NatTrans, name: Optional[str] = None):
        self.T = T
        self.mu = mu
        self.eta = eta
        self.T2 = T2
        self.T0 = T0
        self.sl = sl
        self.sr = sr
        self.name = name or T.name

    @property
    def cat(self) -> CategorySpec:
        return self.T.cat

    def obj(self, X: Obj) -> Obj:
        return self.T.obj(X)

    def mor(self, f: Mor) -> Mor:
        return self.T.mor(f)

    def mu_at(self, X: Obj) -> Mor:
        return nat_component(self.mu, X)

    def eta_at(self, X: Obj) -> Mor:
        return nat_component(self.eta, X)

    def T2_at(self, X: Obj, Y: Obj) -> Mor:
        return nat_component(self.T2, X, Y)

    def sl_at(self, X: Obj) -> Mor:
        return nat_component(self.sl, X)

    def sr_at(self, X: Obj) -> Mor:
        return nat_component(self.sr, X)

    def T3_at(self, X: Obj, Y: Obj, Z: Obj) -> Mor:
        """``(T2(X, Y) ⊗ id) T2(X ⊗ Y, Z)``."""
        cat = self.cat
        return tensor(self.T2_at(X, Y), self.obj(Z), cat) @ self.T2_at(tensor_obj(cat, X, Y), Z)

    def __repr__(self) -> str:
        return f"HopfMonad({self.name})"


def make_hopf_monad(T: LinearFunctor,
                    mu: Callable[[int], Mor],
                    eta: Callable[[int], Mor],
                    T2: Callable[[int, int], Mor],
                    T0: Mor,
                    sl: Callable[[int], Mor],
                    sr: Callable[[int], Mor],
                    name: Optional[str] = None) -> HopfMonad:
    """Wrap component functions at simples into a :class:`HopfMonad`."""
    cat = T.cat
    n = name or T.name
    return HopfMonad(
        T,
        NatTrans(cat, Ap(T, Ap(T, X0)), Ap(T, X0), 1, mu, f"mu[{n}]"),
        NatTrans(cat, X0, Ap(T, X0), 1, eta, f"eta[{n}]"),
        NatTrans(cat, Ap(T, Ten(X0, X1)), Ten(Ap(T, X0), Ap(T, X1)), 2, T2, f"T2[{n}]"),
        T0,
        NatTrans(cat, Ap(T, LDual(Ap(T, X0))), LDual(X0), 1, sl, f"sl[{n}]"),
        NatTrans(cat, Ap(T, RDual(Ap(T, X0))), RDual(X0), 1, sr, f"sr[{n}]"),
        n,
    )


def identity_monad(cat: CategorySpec) -> HopfMonad:
    """The identity Hopf monad."""
    T = identity_functor(cat)

    def unary(i):
        return identity(cat, (i,))

    def pair(i, j):
        return identity(cat, tensor_obj(cat, (i,), (j,)))

    def dual(i):
        return identity(cat, dual_obj(cat, (i,)))

    return make_hopf_monad(T, unary, unary, pair, identity(cat, UNIT), dual, dual, "1")


def _reindex_left(cat: CategorySpec, A: Obj, X: Obj) -> Mor:
    """The permutation ``T(X) → A ⊗ X`` for the functor ``A ⊗ ?``."""
    n, nx = len(A), len(X)
    one = cat.field.one
    src = ()
    for x in X:
        src += tensor_obj(cat, A, (x,))
    out = {(k * nx + a, a * n + k): one for a in range(nx) for k in range(n)}
    return Mor(cat, src, tensor_obj(cat, A, X), out)


def hopf_monad_from_algebra(H: HopfAlgebra, side: str = "right") -> HopfMonad:
    """
    The Hopf monad ``? ⊗ A`` (``side="right"``) or ``A ⊗ ?`` (``side="left"``).
    """
    cat, A = H.cat, H.A
    if side == "right":
        T = LinearFunctor(cat, [tensor_obj(cat, (i,), A) for i in cat.simples], f"?⊗{H.name}")

        def mu(i):
            return tensor((i,), H.m, cat)

        def eta(i):
            return tensor((i,), H.u, cat)

        def T2(i, j):
            X, Y = (i,), (j,)
            return compose_all(
                tensor_all(cat, X, H.tau(Y, A), A),
                tensor(tensor_obj(cat, X, Y), H.delta, cat),
            )

        def sl(i):
            X = (i,)
            DX = dual_obj(cat, X)
            return compose_all(
                tensor(ev(cat, A), DX, cat),
                tensor(dual_obj(cat, A), H.tau(DX, A), cat),
                tensor(tensor_obj(cat, dual_obj(cat, A), DX), H.S_inv, cat),
                tensor(dual_tensor_iso_inv(cat, X, A), A, cat),
            )

        def sr(i):
            X = (i,)
            DX = dual_obj(cat, X)
            DA = dual_obj(cat, A)
            return compose_all(
                tensor(ev_right(cat, A), DX, cat),
                H.tau(tensor_obj(cat, DA, DX), A),
                tensor(tensor_obj(cat, DA, DX), H.S, cat),
                tensor(dual_tensor_iso_inv(cat, X, A), A, cat),
            )

    elif side == "left":
        T = LinearFunctor(cat, [tensor_obj(cat, A, (i,)) for i in cat.simples], f"{H.name}⊗?")

        def mu(i):
            X = (i,)
            AX = tensor_obj(cat, A, X)
            return tensor(H.m, X, cat) @ _reindex_left(cat, A, AX)

        def eta(i):
            return tensor(H.u, (i,), cat)

        def T2(i, j):
            X, Y = (i,), (j,)
            return compose_all(
                tensor_all(cat, A, H.tau(A, X), Y),
                tensor(H.delta, tensor_obj(cat, X, Y), cat),
            )

        def sl(i):
            X = (i,)
            DX, DA = dual_obj(cat, X), dual_obj(cat, A)
            W = dual_obj(cat, tensor_obj(cat, A, X))
            return compose_all(
                tensor(DX, ev(cat, A), cat),
                H.tau(A, tensor_obj(cat, DX, DA)),
                tensor(H.S, tensor_obj(cat, DX, DA), cat),
                tensor(A, dual_tensor_iso_inv(cat, A, X), cat),
                _reindex_left(cat, A, W),
            )

        def sr(i):
            X = (i,)
            DX, DA = dual_obj(cat, X), dual_obj(cat, A)
            W = dual_obj(cat, tensor_obj(cat, A, X))
            return compose_all(
                tensor(DX, ev_right(cat, A), cat),
                tensor(H.tau(A, DX), DA, cat),
                tensor(H.S_inv, tensor_obj(cat, DX, DA), cat),
                tensor(A, dual_tensor_iso_inv(cat, A, X), cat),
                _reindex_left(cat, A, W),
            )

    else:
        raise ShapeError(f"Unknown side: {side}")
    return make_hopf_monad(T, mu, eta, T2, H.eps, sl, sr, T.name)


# checks

def _tuples(cat: CategorySpec, arity: int, limit: Optional[int]) -> Iterable[Tuple[int, ...]]:
    """Simple tuples of the given arity; a limit of 0 means all of them."""
    limit = config.max_tuples if limit is None else limit
    tuples = product(cat.simples, repeat=arity)
    return islice(tuples, limit) if limit else tuples


def check_hopf_monad(T: HopfMonad, rng: Optional[np.random.Generator] = None,
                     samples: Optional[int] = None, max_tuples: Optional[int] = None,
                     report: Optional[Report] = None) -> Report:
    """
    Every Hopf monad axiom at every simple tuple, up to ``max_tuples`` per arity.

    With an ``rng`` every axiom is also evaluated on random composite
    objects, ``samples`` times.
    """
    report = report if report is not None else Report(f"check-hopf-monad:{T.name}")
    cat = T.cat
    one = identity(cat, UNIT)
    for (i,) in _tuples(cat, 1, max_tuples):
        _unary_axioms(T, (i,), report, location_of(i))
    for (i, j) in _tuples(cat, 2, max_tuples):
        _binary_axioms(T, (i,), (j,), report, location_of(i, j))
    for (i, j, k) in _tuples(cat, 3, max_tuples):
        _ternary_axioms(T, (i,), (j,), (k,), report, location_of(i, j, k))
    report.compare("mu_counit", "1", T.T0 @ T.mu_at(UNIT), T.T0 @ T.mor(T.T0))
    report.compare("eta_counit", "1", T.T0 @ T.eta_at(UNIT), one)
    if rng is not None:
        for _ in range(samples or config.samples):
            X = random_object(cat, rng, 2)
            Y, Z = random_object(cat, rng, 1), random_object(cat, rng, 1)
            _unary_axioms(T, X, report, location_of(*X))
            _binary_axioms(T, X, Y, report, (X, Y))
            _ternary_axioms(T, X, Y, Z, report, (X, Y, Z))
    report.note("check_hopf_monad")
    return report


def _unary_axioms(T: HopfMonad, X: Obj, report: Report, loc: str):
    cat = T.cat
    TX = T.obj(X)
    idt = identity(cat, TX)
    mu = T.mu_at(X)
    report.compare("monad_associative", loc, mu @ T.mor(mu), mu @ T.mu_at(TX))
    report.compare("monad_unit_left", loc, mu @ T.eta_at(TX), idt)
    report.compare("monad_unit_right", loc, mu @ T.mor(T.eta_at(X)), idt)
    report.compare("counit_left", loc, tensor(T.T0, TX, cat) @ T.T2_at(UNIT, X), idt)
    report.compare("counit_right", loc, tensor(TX, T.T0, cat) @ T.T2_at(X, UNIT), idt)
    _left_antipode_axioms(T, X, report, loc)
    _right_antipode_axioms(T, X, report, loc)


def _binary_axioms(T: HopfMonad, X: Obj, Y: Obj, report: Report, loc):
    cat = T.cat
    XY = tensor_obj(cat, X, Y)
    TX, TY = T.obj(X), T.obj(Y)
    report.compare("mu_comonoidal", loc, T.T2_at(X, Y) @ T.mu_at(XY),
                   compose_all(tensor(T.mu_at(X), T.mu_at(Y)), T.T2_at(TX, TY),
                               T.mor(T.T2_at(X, Y))))
    report.compare("eta_comonoidal", loc, T.T2_at(X, Y) @ T.eta_at(XY),
                   tensor(T.eta_at(X), T.eta_at(Y)))


def _ternary_axioms(T: HopfMonad, X: Obj, Y: Obj, Z: Obj, report: Report, loc):
    cat = T.cat
    report.compare("comonoidal_coassociative", loc, T.T3_at(X, Y, Z),
                   tensor(T.obj(X), T.T2_at(Y, Z), cat) @ T.T2_at(X, tensor_obj(cat, Y, Z)))


def _left_antipode_axioms(T: HopfMonad, X: Obj, report: Report, loc: str):
    cat = T.cat
    TX = T.obj(X)
    DTX = dual_obj(cat, TX)
    lhs = compose_all(T.T0, T.mor(ev(cat, X)), T.mor(tensor(dual_mor(T.eta_at(X)), X, cat)))
    rhs = compose_all(
        ev(cat, TX),
        tensor(T.sl_at(TX) @ T.mor(dual_mor(T.mu_at(X))), TX, cat),
        T.T2_at(DTX, X),
    )
    report.compare("left_antipode_1", loc, lhs, rhs)
    lhs = compose_all(tensor(T.eta_at(X), dual_obj(cat, X), cat), coev(cat, X), T.T0)
    rhs = compose_all(tensor(T.mu_at(X), T.sl_at(X)), T.T2_at(TX, DTX), T.mor(coev(cat, TX)))
    report.compare("left_antipode_2", loc, lhs, rhs)


def _right_antipode_axioms(T: HopfMonad, X: Obj, report: Report, loc: str):
    cat = T.cat
    TX = T.obj(X)
    DTX = dual_obj(cat, TX)
    lhs = compose_all(T.T0, T.mor(ev_right(cat, X)),
                      T.mor(tensor(X, dual_mor(T.eta_at(X), "right"), cat)))
    rhs = compose_all(
        ev_right(cat, TX),
        tensor(TX, T.sr_at(TX) @ T.mor(dual_mor(T.mu_at(X), "right")), cat),
        T.T2_at(X, DTX),
    )
    report.compare("right_antipode_1", loc, lhs, rhs)
    lhs = compose_all(tensor(dual_obj(cat, X), T.eta_at(X), cat), coev_right(cat, X), T.T0)
    rhs = compose_all(tensor(T.sr_at(X), T.mu_at(X)), T.T2_at(DTX, TX),
                      T.mor(coev_right(cat, TX)))
    report.compare("right_antipode_2", loc, lhs, rhs)


# modules over a Hopf monad

@dataclass
class TModule:
    """An object with an action ``T(M) → M``."""

    M: Obj
    action: Mor


def check_tmodule(T: HopfMonad, mod: TModule, report: Optional[Report] = None) -> Report:
    report = report if report is not None else Report(f"check-tmodule:{T.name}")
    r = mod.action
    if r.src != T.obj(mod.M) or r.dst != mod.M:
        report.expect("shape", "action", False, f"{r.src} -> {r.dst}")
        return report
    report.compare("tmodule_associative", location_of(*mod.M), r @ T.mor(r), r @ T.mu_at(mod.M))
    report.compare("tmodule_unital", location_of(*mod.M), r @ T.eta_at(mod.M),
                   identity(T.cat, mod.M))
    return report


def _validated(T: HopfMonad, mod: TModule):
    check_tmodule(T, mod).raise_if_failed(f"Not a {T.name}-module")


def free_tmodule(T: HopfMonad, X: Obj) -> TModule:
    return TModule(T.obj(X), T.mu_at(X))


def unit_tmodule(T: HopfMonad) -> TModule:
    return TModule(UNIT, T.T0)


def tmodule_tensor(T: HopfMonad, M: TModule, N: TModule) -> TModule:
    """``(M ⊗ N, (r ⊗ s) T2(M, N))``."""
    _validated(T, M)
    _validated(T, N)
    return TModule(tensor_obj(T.cat, M.M, N.M), tensor(M.action, N.action) @ T.T2_at(M.M, N.M))


def tmodule_dual(T: HopfMonad, mod: TModule, side: str = "left") -> TModule:
    """Left dual ``(∨M, s^l_M T(∨r))`` or right dual ``(M^∨, s^r_M T(r^∨))``."""
    _validated(T, mod)
    if side == "left":
        action = T.sl_at(mod.M) @ T.mor(dual_mor(mod.action))
    elif side == "right":
        action = T.sr_at(mod.M) @ T.mor(dual_mor(mod.action, "right"))
    else:
        raise ModuleValidationError(f"Unknown duality side: {side}")
    return TModule(dual_obj(T.cat, mod.M), action)


def pullback_tmodule(f: NatTrans, mod: TModule) -> TModule:
    """Restrict a module along a monad morphism ``f``: the action ``r ∘ f_M``."""
    return TModule(mod.M, mod.action @ nat_component(f, mod.M))


def is_tmodule_morphism(T: HopfMonad, g: Mor, M: TModule, N: TModule) -> bool:
    return g @ M.action == N.action @ T.mor(g)


# R-matrices

def rmatrix_transformation(T: HopfMonad, component: Callable[[int, int], Mor],
                           name: str = "R") -> NatTrans:
    """An R-matrix candidate ``X ⊗ Y → T(Y) ⊗ T(X)`` from its simple components."""
    return NatTrans(T.cat, Ten(X0, X1), Ten(Ap(T.T, X1), Ap(T.T, X0)), 2, component,
                    f"{name}[{T.name}]")


def check_monad_rmatrix(T: HopfMonad, R: NatTrans, max_tuples: Optional[int] = None,
                        report: Optional[Report] = None) -> Report:
    """The R-matrix axioms at simple pairs and triples."""
    report = report if report is not None else Report(f"check-rmatrix:{T.name}")
    cat = T.cat
    for (i, j) in _tuples(cat, 2, max_tuples):
        X, Y = (i,), (j,)
        TX, TY = T.obj(X), T.obj(Y)
        report.compare(
            "rmatrix_mu", location_of(i, j),
            compose_all(tensor(T.mu_at(Y), T.mu_at(X)), nat_component(R, TX, TY), T.T2_at(X, Y)),
            compose_all(tensor(T.mu_at(Y), T.mu_at(X)), T.T2_at(TY, TX),
                        T.mor(nat_component(R, X, Y))),
        )
    for (i, j, k) in _tuples(cat, 3, max_tuples):
        X, Y, Z = (i,), (j,), (k,)
        loc = location_of(i, j, k)
        TX, TY, TZ = T.obj(X), T.obj(Y), T.obj(Z)
        report.compare(
            "rmatrix_left_tensor", loc,
            tensor(TZ, T.T2_at(X, Y), cat) @ nat_component(R, tensor_obj(cat, X, Y), Z),
            compose_all(tensor(T.mu_at(Z), tensor_obj(cat, TX, TY), cat),
                        tensor(nat_component(R, X, TZ), TY, cat),
                        tensor(X, nat_component(R, Y, Z), cat)),
        )
        report.compare(
            "rmatrix_right_tensor", loc,
            tensor(T.T2_at(Y, Z), TX, cat) @ nat_component(R, X, tensor_obj(cat, Y, Z)),
            compose_all(tensor(tensor_obj(cat, TY, TZ), T.mu_at(X), cat),
                        tensor(TY, nat_component(R, TX, Z), cat),
                        tensor(nat_component(R, X, Y), Z, cat)),
        )
    for (i,) in _tuples(cat, 1, max_tuples):
        X = (i,)
        TX = T.obj(X)
        report.compare("rmatrix_unit_left", location_of(i),
                       tensor(TX, T.T0, cat) @ nat_component(R, UNIT, X), T.eta_at(X))
        report.compare("rmatrix_unit_right", location_of(i),
                       tensor(T.T0, TX, cat) @ nat_component(R, X, UNIT), T.eta_at(X))
    report.note("check_monad_rmatrix")
    return report


def braiding_from_monad_rmatrix(T: HopfMonad, R: NatTrans, M: TModule, N: TModule) -> Mor:
    """The braiding ``c_{M,N} = (s ⊗ r) R_{M,N}`` of two T-modules."""
    _validated(T, M)
    _validated(T, N)
    return tensor(N.action, M.action) @ nat_component(R, M.M, N.M)


# morphisms of Hopf monads

def monad_morphism(src: HopfMonad, dst: HopfMonad, component: Callable[[int], Mor],
                   name: str = "f") -> NatTrans:
    return NatTrans(src.cat, Ap(src.T, X0), Ap(dst.T, X0), 1, component, name)


def algebra_map_morphism(src: HopfMonad, dst: HopfMonad, f: Mor, name: str = "f") -> NatTrans:
    """The morphism ``id ⊗ f`` between two monads of the form ``? ⊗ A``."""
    cat = src.cat
    return monad_morphism(src, dst, lambda i: tensor((i,), f, cat), name)


def unit_morphism(T: HopfMonad) -> NatTrans:
    """The unit ``η``, a morphism from the identity monad to ``T``."""
    return monad_morphism(identity_monad(T.cat), T, T.eta.at, f"eta[{T.name}]")


def check_monad_morphism(f: NatTrans, src: HopfMonad, dst: HopfMonad,
                         max_tuples: Optional[int] = None) -> Report:
    """
    Compatibility of ``f: S → T`` with products, units and comonoidal data,
    and the pullback of free T-modules.
    """
    report = Report(f"check-monad-morphism:{f.name}")
    cat = src.cat
    for (i,) in _tuples(cat, 1, max_tuples):
        X = (i,)
        loc = location_of(i)
        fX = nat_component(f, X)
        report.compare("morphism_mu", loc, fX @ src.mu_at(X),
                       compose_all(dst.mu_at(X), dst.mor(fX), nat_component(f, src.obj(X))))
        report.compare("morphism_eta", loc, fX @ src.eta_at(X), dst.eta_at(X))
        pulled = pullback_tmodule(f, free_tmodule(dst, X))
        report.extend(check_tmodule(src, pulled, Report()))
    for (i, j) in _tuples(cat, 2, max_tuples):
        X, Y = (i,), (j,)
        report.compare("morphism_comonoidal", location_of(i, j),
                       dst.T2_at(X, Y) @ nat_component(f, tensor_obj(cat, X, Y)),
                       tensor(nat_component(f, X), nat_component(f, Y)) @ src.T2_at(X, Y))
    report.compare("morphism_counit", "1", dst.T0 @ nat_component(f, UNIT), src.T0)
    report.note("check_monad_morphism")
    return report
