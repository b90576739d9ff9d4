"""
The centralizer ``Z_T`` of a Hopf monad, its canonical distributive law and
the double ``D_T = Z_T ∘_Ω T``.

``Z_T(X) = ⊕_j ∨T(V_j) ⊗ X ⊗ V_j`` with the universal coaction ``∂``.
Every structure map of ``Z_T`` is the unique solution of its defining
identity against the jointly universal family ``∂_{X, V_j}``.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple
from app.distributive import (
    check_distributive_law,
    check_law_inverse,
    compose_with_law,
    law_transformation,
)
from app.functors import X0, X1, Ap, Const, LinearFunctor, NatTrans, Ten, nat_component
from app.hopfalg import check_hopf_axioms, check_hopf_pairing
from app.hopfmonad import (
    HopfMonad,
    TModule,
    _tuples,
    braiding_from_monad_rmatrix,
    check_monad_rmatrix,
    check_tmodule,
    free_tmodule,
    identity_monad,
    make_hopf_monad,
    rmatrix_transformation,
    tmodule_dual,
    tmodule_tensor,
    unit_tmodule,
)
from app.linalg import bend, factor_through, hconcat, inverse, solve_left, solve_linear_map
from app.logger import Logger
from app.report import Report, location_of
from app.semicat import (
    UNIT,
    Mor,
    Obj,
    coev,
    compose_all,
    dual_mor,
    dual_obj,
    dual_tensor_iso,
    dual_tensor_iso_inv,
    ev,
    identity,
    tensor,
    tensor_all,
    tensor_obj,
)


class Centralizer:
    """
    The centralizer of a Hopf monad ``T``.

    Attributes:
        T: the centralized Hopf monad
        Z: the Hopf monad ``Z_T``
        partial: the coaction ``∂_{X,Y}: X ⊗ Y → T(Y) ⊗ Z_T(X)``
    """

    def __init__(self, T: HopfMonad):
        self.T = T
        self.cat = T.cat
        cat = self.cat
        self._offsets: Dict[int, List[int]] = {}
        on_simple = []
        for i in cat.simples:
            obj: Tuple[int, ...] = ()
            offs = []
            for j in cat.simples:
                offs.append(len(obj))
                obj += tensor_all(cat, self.dual_T(j), (i,), (j,))
            self._offsets[i] = offs
            on_simple.append(obj)
        self.functor = LinearFunctor(cat, on_simple, f"Z[{T.name}]")
        self.partial = NatTrans(cat, Ten(X0, X1), Ten(Ap(T.T, X1), Ap(self.functor, X0)), 2,
                                self._partial_simple, f"partial[{T.name}]")
        self.Z = make_hopf_monad(self.functor, self._mu, self._eta, self._Z2, self._Z0(),
                                 self._sl, self._sr, self.functor.name)
        Logger().info(f"Centralized {T.name}: dim Z(1) = {len(self.functor.obj(UNIT))}")

    def dual_T(self, j: int) -> Obj:
        return dual_obj(self.cat, self.T.obj((j,)))

    def iota(self, i: int, j: int) -> Mor:
        """The summand injection ``∨T(V_j) ⊗ V_i ⊗ V_j → Z_T(V_i)``."""
        cat = self.cat
        piece = tensor_all(cat, self.dual_T(j), (i,), (j,))
        start = self._offsets[i][j]
        one = cat.field.one
        return Mor(cat, piece, self.functor.on_simple[i],
                   {(start + p, p): one for p in range(len(piece))}, check=False)

    def projection(self, i: int, j: int) -> Mor:
        inj = self.iota(i, j)
        return Mor(self.cat, inj.dst, inj.src, {(c, r): v for (r, c), v in inj.entries.items()},
                   check=False)

    def _partial_simple(self, i: int, k: int) -> Mor:
        cat = self.cat
        TY = self.T.obj((k,))
        return compose_all(
            tensor(TY, self.iota(i, k), cat),
            tensor(coev(cat, TY), tensor_obj(cat, (i,), (k,)), cat),
        )

    def partial_at(self, X: Obj, Y: Obj) -> Mor:
        return nat_component(self.partial, X, Y)

    def i_at(self, X: Obj, Y: Obj) -> Mor:
        """``i_{X,Y} = (ev_{T(Y)} ⊗ id)(id ⊗ ∂_{X,Y}): ∨T(Y) ⊗ X ⊗ Y → Z_T(X)``."""
        return bend(self.partial_at(X, Y), self.T.obj(Y), self.functor.obj(X))

    def factor(self, X: Obj, xis: List[Mor], W: Obj) -> Mor:
        """The unique ``g: Z_T(X) → W`` with ``(id ⊗ g) ∂_{X,V_k} = xis[k]``."""
        cat = self.cat
        dels = [self.partial_at(X, (k,)) for k in cat.simples]
        U = [self.T.obj((k,)) for k in cat.simples]
        return factor_through(dels, xis, U, self.functor.obj(X), W)

    # structure of Z_T at simples

    def _eta(self, i: int) -> Mor:
        X = (i,)
        return tensor(self.T.T0, self.functor.obj(X), self.cat) @ self.partial_at(X, UNIT)

    def _mu(self, i: int) -> Mor:
        cat, T = self.cat, self.T
        X = (i,)
        ZX = self.functor.obj(X)
        zetas = []
        for k in cat.simples:
            Y2 = (k,)
            dels, xis, U = [], [], []
            for l in cat.simples:
                Y1 = (l,)
                dels.append(tensor(self.partial_at(X, Y1), Y2, cat))
                xis.append(tensor(T.T2_at(Y1, Y2), ZX, cat)
                           @ self.partial_at(X, tensor_obj(cat, Y1, Y2)))
                U.append(T.obj(Y1))
            zetas.append(factor_through(dels, xis, U, tensor_obj(cat, ZX, Y2),
                                        tensor_obj(cat, T.obj(Y2), ZX)))
        return self.factor(ZX, zetas, ZX)

    def _Z2(self, i: int, j: int) -> Mor:
        cat, T = self.cat, self.T
        X1, X2 = (i,), (j,)
        Z1, Z2 = self.functor.obj(X1), self.functor.obj(X2)
        xis = []
        for k in cat.simples:
            Y = (k,)
            TY = T.obj(Y)
            xis.append(compose_all(
                tensor(T.mu_at(Y), tensor_obj(cat, Z1, Z2), cat),
                tensor(self.partial_at(X1, TY), Z2, cat),
                tensor(X1, self.partial_at(X2, Y), cat),
            ))
        return self.factor(tensor_obj(cat, X1, X2), xis, tensor_obj(cat, Z1, Z2))

    def _Z0(self) -> Mor:
        return self.factor(UNIT, [self.T.eta_at((k,)) for k in self.cat.simples], UNIT)

    def _sl(self, i: int) -> Mor:
        cat, T = self.cat, self.T
        X = (i,)
        ZX = self.functor.obj(X)
        xis = []
        for k in cat.simples:
            Y = (k,)
            TYd = dual_obj(cat, T.obj(Y))
            Yd = dual_obj(cat, Y)
            xi = tensor(T.sr_at(Y), ZX, cat) @ self.partial_at(X, TYd)
            xis.append(compose_all(
                dual_tensor_iso_inv(cat, X, TYd),
                dual_mor(xi),
                dual_tensor_iso(cat, Yd, ZX),
            ))
        return self.factor(dual_obj(cat, ZX), xis, dual_obj(cat, X))

    def _sr(self, i: int) -> Mor:
        cat, T = self.cat, self.T
        X = (i,)
        ZX = self.functor.obj(X)
        xis = []
        for k in cat.simples:
            Y = (k,)
            TYd = dual_obj(cat, T.obj(Y))
            Yd = dual_obj(cat, Y)
            xi = tensor(T.sl_at(Y), ZX, cat) @ self.partial_at(X, TYd)
            xis.append(compose_all(
                dual_tensor_iso_inv(cat, X, TYd),
                dual_mor(xi, "right"),
                dual_tensor_iso(cat, Yd, ZX),
            ))
        return self.factor(dual_obj(cat, ZX), xis, dual_obj(cat, X))

    def __repr__(self) -> str:
        return f"Centralizer({self.T.name})"


def centralize(T: HopfMonad) -> Centralizer:
    """Build the centralizer ``Z_T`` with its coaction."""
    return Centralizer(T)


def check_coaction(cent: Centralizer, max_tuples: Optional[int] = None,
                   report: Optional[Report] = None) -> Report:
    """The defining identities of ``Z_T``'s structure, re-evaluated after solving."""
    report = report if report is not None else Report(f"check-coaction:{cent.T.name}")
    cat, T, Z = cent.cat, cent.T, cent.Z
    for (k,) in _tuples(cat, 1, max_tuples):
        Y = (k,)
        report.compare("coaction_counit", location_of(k),
                       tensor(T.obj(Y), Z.T0, cat) @ cent.partial_at(UNIT, Y), T.eta_at(Y))
    for (i, k, l) in _tuples(cat, 3, max_tuples):
        X, Y1, Y2 = (i,), (k,), (l,)
        loc = location_of(i, k, l)
        ZX = Z.obj(X)
        lhs = compose_all(
            tensor(T.obj(Y1), tensor(T.obj(Y2), Z.mu_at(X), cat), cat),
            tensor(T.obj(Y1), cent.partial_at(ZX, Y2), cat),
            tensor(cent.partial_at(X, Y1), Y2, cat),
        )
        rhs = tensor(T.T2_at(Y1, Y2), ZX, cat) @ cent.partial_at(X, tensor_obj(cat, Y1, Y2))
        report.compare("coaction_product", loc, lhs, rhs)
        X1, X2, Y = (i,), (k,), (l,)
        Z1, Z2 = Z.obj(X1), Z.obj(X2)
        TY = T.obj(Y)
        lhs = tensor(TY, Z.T2_at(X1, X2), cat) @ cent.partial_at(tensor_obj(cat, X1, X2), Y)
        rhs = compose_all(
            tensor(T.mu_at(Y), tensor_obj(cat, Z1, Z2), cat),
            tensor(cent.partial_at(X1, TY), Z2, cat),
            tensor(X1, cent.partial_at(X2, Y), cat),
        )
        report.compare("coaction_comonoidal", loc, lhs, rhs)
    report.note("check_coaction")
    return report


def check_nonrepresentability(cat, x: int) -> Report:
    """
    Compare ``Z(x)`` with ``Z(1) ⊗ x`` and ``x ⊗ Z(1)`` for the identity monad.

    ``Z(x) ≅ x^{#G}`` exactly when ``x`` is central; the record passes when
    the observed isomorphism type agrees with that prediction.
    """

    report = Report(f"nonrepresentability:{cat.name}")
    cent = centralize(identity_monad(cat))
    Zx = sorted(cent.functor.obj((x,)))
    Z1 = cent.functor.obj(UNIT)
    right = sorted(tensor_obj(cat, Z1, (x,)))
    left = sorted(tensor_obj(cat, (x,), Z1))
    power = [x] * cat.n_simples
    central = all(cat.tensor_table[x][g] == cat.tensor_table[g][x] for g in cat.simples)
    observed = Zx == power
    verdict = "isomorphic" if observed else "not isomorphic"
    report.expect("z_power_matches_centrality", f"x={x}: {verdict}", observed == central,
                  f"Z(x) = {Zx}")
    report.expect("z_right_product", f"x={x}", (Zx == right) == central, f"Z(1)⊗x = {right}")
    report.expect("z_left_product", f"x={x}", (Zx == left) == central, f"x⊗Z(1) = {left}")
    report.note("check_nonrepresentability")
    return report


# the canonical distributive law

def _fusion_term(cent: Centralizer, X: Obj, Y: Obj) -> Mor:
    """``i_{TX,TY} (∨μ_Y s^l_{TY} T(∨μ_Y) ⊗ id) T3(∨TY, X, Y)``."""
    cat, T = cent.cat, cent.T
    TX, TY = T.obj(X), T.obj(Y)
    DTY = dual_obj(cat, TY)
    dmu = dual_mor(T.mu_at(Y))
    g = compose_all(dmu, T.sl_at(TY), T.mor(dmu))
    return compose_all(
        cent.i_at(TX, TY),
        tensor(g, tensor_obj(cat, TX, TY), cat),
        T.T3_at(DTY, X, Y),
    )


def canonical_law(cent: Centralizer, max_tuples: Optional[int] = None) -> Tuple[NatTrans, Report]:
    """
    The canonical distributive law ``Ω: T Z_T → Z_T T`` with its certificate.

    ``Ω_X`` is solved from ``Ω_X T(i_{X,Y}) = fusion term`` over all simples
    ``Y`` and cross-checked against the direct sum ``Σ_j term_j T(π_j)``.

    Raises:
        FalsificationError: if any certificate check fails.
    """

    cat, T, Z = cent.cat, cent.T, cent.Z

    def component(i):
        X = (i,)
        lhs = hconcat([T.mor(cent.i_at(X, (j,))) for j in cat.simples])
        rhs = hconcat([_fusion_term(cent, X, (j,)) for j in cat.simples])
        return solve_left(lhs, rhs)

    Omega = law_transformation(Z, T, component, f"Omega[{T.name}]")
    report = Report(f"canonical-law:{T.name}")
    for (i,) in _tuples(cat, 1, max_tuples):
        X = (i,)
        summed = None
        for j in cat.simples:
            term = _fusion_term(cent, X, (j,)) @ T.mor(cent.projection(i, j))
            summed = term if summed is None else summed + term
        report.compare("law_fusion_sum", location_of(i), nat_component(Omega, X), summed)
    for (i, k) in _tuples(cat, 2, max_tuples):
        X, Y = (i,), (k,)
        TY, ZX = T.obj(Y), Z.obj(X)
        lhs = compose_all(tensor(T.mu_at(Y), nat_component(Omega, X)),
                          T.T2_at(TY, ZX), T.mor(cent.partial_at(X, Y)))
        rhs = compose_all(tensor(T.mu_at(Y), Z.obj(T.obj(X)), cat),
                          cent.partial_at(T.obj(X), TY), T.T2_at(X, Y))
        report.compare("law_characterization", location_of(i, k), lhs, rhs)
    check_distributive_law(Omega, Z, T, max_tuples, report)
    check_law_inverse(Z, T, Omega, max_tuples, report)
    report.note("canonical_law")
    Logger().log_pipeline(report)
    report.raise_if_failed(f"Canonical law of {T.name} failed its certificate")
    return Omega, report


def double(cent: Centralizer, Omega: NatTrans) -> Tuple[HopfMonad, NatTrans]:
    """
    The double ``D_T = Z_T ∘_Ω T`` and its R-matrix
    ``R_{X,Y} = (u_{T(Y)} ⊗ Z_T(η_X)) ∂_{X,Y}``.
    """

    cat, T, Z = cent.cat, cent.T, cent.Z
    D = compose_with_law(Z, T, Omega, f"D[{T.name}]")

    def component(i, j):
        X, Y = (i,), (j,)
        return tensor(Z.eta_at(T.obj(Y)), Z.mor(T.eta_at(X))) @ cent.partial_at(X, Y)

    return D, rmatrix_transformation(D, component)


# half-braidings

@dataclass
class HalfBraiding:
    """An object ``M`` with ``σ_Y: M ⊗ Y → T(Y) ⊗ M`` natural in ``Y``."""

    M: Obj
    sigma: NatTrans

    def at(self, Y: Obj) -> Mor:
        return nat_component(self.sigma, Y)


def half_braiding(T: HopfMonad, M: Obj, component, name: str = "sigma") -> HalfBraiding:
    cat = T.cat
    word = NatTrans(cat, Ten(Const(M), X0), Ten(Ap(T.T, X0), Const(M)), 1, component, name)
    return HalfBraiding(tuple(M), word)


def check_half_braiding(T: HopfMonad, hb: HalfBraiding, max_tuples: Optional[int] = None,
                        report: Optional[Report] = None) -> Report:
    """Multiplicativity and unitality of a half-braiding."""
    report = report if report is not None else Report(f"check-half-braiding:{T.name}")
    cat, M = T.cat, hb.M
    for (j, k) in _tuples(cat, 2, max_tuples):
        Y, Z = (j,), (k,)
        lhs = tensor(T.T2_at(Y, Z), M, cat) @ hb.at(tensor_obj(cat, Y, Z))
        rhs = compose_all(tensor(T.obj(Y), hb.at(Z), cat), tensor(hb.at(Y), Z, cat))
        report.compare("half_braiding_multiplicative", location_of(j, k), lhs, rhs)
    report.compare("half_braiding_unital", "1", tensor(T.T0, M, cat) @ hb.at(UNIT),
                   identity(cat, M))
    return report


def unit_half_braiding(T: HopfMonad) -> HalfBraiding:
    return half_braiding(T, UNIT, lambda j: T.eta.at(j), "sigma[1]")


def product_half_braiding(T: HopfMonad, first: HalfBraiding, second: HalfBraiding) -> HalfBraiding:
    """``ρ_Y = (μ_Y ⊗ id)(σ_{T(Y)} ⊗ id)(id ⊗ γ_Y)`` on ``M ⊗ N``."""
    cat = T.cat
    M, N = first.M, second.M

    def component(j):
        Y = (j,)
        return compose_all(
            tensor(T.mu_at(Y), tensor_obj(cat, M, N), cat),
            tensor(first.at(T.obj(Y)), N, cat),
            tensor(M, second.at(Y), cat),
        )

    return half_braiding(T, tensor_obj(cat, M, N), component, "sigma⊗")


def dual_half_braiding(T: HopfMonad, hb: HalfBraiding) -> HalfBraiding:
    """The half-braiding of ``∨M``, transposed through the right antipode."""
    cat, M = T.cat, hb.M

    def component(j):
        Y = (j,)
        TYd = dual_obj(cat, T.obj(Y))
        xi = tensor(T.sr_at(Y), M, cat) @ hb.at(TYd)
        return compose_all(
            dual_tensor_iso_inv(cat, M, TYd),
            dual_mor(xi),
            dual_tensor_iso(cat, dual_obj(cat, Y), M),
        )

    return half_braiding(T, dual_obj(cat, M), component, "sigma^l")


def half_braiding_E(cent: Centralizer, mod) -> HalfBraiding:
    """``E(M, r)``: the half-braiding ``σ_Y = (id_{T(Y)} ⊗ r) ∂_{M,Y}``."""
    cat, T = cent.cat, cent.T
    M, r = mod.M, mod.action

    def component(j):
        Y = (j,)
        return tensor(T.obj(Y), r, cat) @ cent.partial_at(M, Y)

    return half_braiding(T, M, component, "E")


def half_braiding_E_inv(cent: Centralizer, hb: HalfBraiding):
    """The Z_T-action ``r`` with ``(id ⊗ r) ∂_{M,Y} = σ_Y``."""

    r = cent.factor(hb.M, [hb.at((k,)) for k in cent.cat.simples], hb.M)
    return TModule(hb.M, r)


def same_half_braiding(first: HalfBraiding, second: HalfBraiding, cat) -> bool:
    return first.M == second.M and all(first.at((j,)) == second.at((j,)) for j in cat.simples)


def check_E(cent: Centralizer, M, N, report: Optional[Report] = None) -> Report:
    """
    ``E`` on two Z_T-modules: half-braiding axioms, monoidality, left duals
    and the round trip through ``E⁻¹``.
    """

    report = report if report is not None else Report(f"check-E:{cent.T.name}")
    cat, T, Z = cent.cat, cent.T, cent.Z
    EM, EN = half_braiding_E(cent, M), half_braiding_E(cent, N)
    check_half_braiding(T, EM, report=report)
    loc = location_of(*M.M)
    product_hb = product_half_braiding(T, EM, EN)
    tensored = half_braiding_E(cent, tmodule_tensor(Z, M, N))
    report.expect("E_monoidal", loc, same_half_braiding(tensored, product_hb, cat))
    report.expect("E_unit", "1",
                  same_half_braiding(half_braiding_E(cent, unit_tmodule(Z)), unit_half_braiding(T), cat))
    report.expect("E_dual", loc,
                  same_half_braiding(half_braiding_E(cent, tmodule_dual(Z, M)),
                                     dual_half_braiding(T, EM), cat))
    report.compare("E_round_trip", loc, half_braiding_E_inv(cent, EM).action, M.action)
    report.note("half_braiding_E")
    return report


# the centre of the module category

@dataclass
class CenterObject:
    """A T-module with a half-braiding relative to all T-modules."""

    module: object
    action_Z: Mor

    def sigma(self, cent: Centralizer, other) -> Mor:
        """``σ_{(N,s)} = (s ⊗ r Z_T(η_M)) ∂_{M,N}: M ⊗ N → N ⊗ M``."""
        return tensor(other.action, self.action_Z) @ cent.partial_at(self.module.M, other.M)


def center_object_I(cent: Centralizer, D: HopfMonad, mod) -> CenterObject:
    """
    ``I(M, r)`` for a D_T-module: the T-action ``r u_{T(M)}`` and the
    half-braiding built from ``r Z_T(η_M)``.
    """

    check_tmodule(D, mod).raise_if_failed(f"Not a {D.name}-module")
    T, Z = cent.T, cent.Z
    M, r = mod.M, mod.action
    return CenterObject(TModule(M, r @ Z.eta_at(T.obj(M))), r @ Z.mor(T.eta_at(M)))


def center_object_I_inv(cent: Centralizer, obj: CenterObject):
    """Recover the D_T-action from the half-braiding on free T-modules."""

    cat, T = cent.cat, cent.T
    M = obj.module.M
    xis = []
    for k in cat.simples:
        Y = (k,)
        xis.append(obj.sigma(cent, free_tmodule(T, Y)) @ tensor(M, T.eta_at(Y), cat))
    r_Z = cent.factor(M, xis, M)
    return TModule(M, r_Z @ cent.Z.mor(obj.module.action))


def check_center_object(cent: Centralizer, D: HopfMonad, mod,
                        report: Optional[Report] = None) -> Report:
    """T-linearity, multiplicativity and the round trip of ``I`` on free test modules."""

    report = report if report is not None else Report(f"check-I:{D.name}")
    cat, T = cent.cat, cent.T
    obj = center_object_I(cent, D, mod)
    check_tmodule(T, obj.module, report)
    loc = location_of(*mod.M)
    frees = [free_tmodule(T, (k,)) for k in cat.simples]
    for N in frees:
        sigma = obj.sigma(cent, N)
        source = tmodule_tensor(T, obj.module, N)
        target = tmodule_tensor(T, N, obj.module)
        report.compare("I_linear", loc, sigma @ source.action, target.action @ T.mor(sigma))
    for N in frees[:2]:
        for P in frees[:2]:
            NP = tmodule_tensor(T, N, P)
            lhs = obj.sigma(cent, NP)
            rhs = compose_all(tensor(N.M, obj.sigma(cent, P), cat),
                              tensor(obj.sigma(cent, N), P.M, cat))
            report.compare("I_multiplicative", loc, lhs, rhs)
    report.compare("I_unit", loc, obj.sigma(cent, unit_tmodule(T)), identity(cat, mod.M))
    report.compare("I_round_trip", loc, center_object_I_inv(cent, obj).action, mod.action)
    report.note("center_object_I")
    return report


def z_on_monad_morphism(src: Centralizer, dst: Centralizer, f: NatTrans) -> NatTrans:
    """
    The morphism ``Z_{T'} → Z_T`` induced by ``f: T → T'``, the unique
    solution of ``(id ⊗ Z(f)_X) ∂'_{X,Y} = (f_Y ⊗ id) ∂_{X,Y}``.

    ``src`` centralizes ``T`` and ``dst`` centralizes ``T'``.
    """
    cat = src.cat

    def component(i):
        X = (i,)
        xis = [tensor(nat_component(f, (k,)), src.functor.obj(X), cat) @ src.partial_at(X, (k,))
               for k in cat.simples]
        return dst.factor(X, xis, src.functor.obj(X))

    return NatTrans(cat, Ap(dst.functor, X0), Ap(src.functor, X0), 1, component, f"Z({f.name})")


def z_on_monad_morphism_blocks(src: Centralizer, dst: Centralizer, f: NatTrans) -> NatTrans:
    """The same morphism assembled summand by summand as ``∨f_{V_j} ⊗ id ⊗ id``."""
    cat = src.cat

    def component(i):
        pieces = []
        for j in cat.simples:
            block = tensor_all(cat, dual_mor(nat_component(f, (j,))), (i,), (j,))
            pieces.append(compose_all(src.iota(i, j), block, dst.projection(i, j)))
        total = pieces[0]
        for p in pieces[1:]:
            total = total + p
        return total

    return NatTrans(cat, Ap(dst.functor, X0), Ap(src.functor, X0), 1, component,
                    f"Z({f.name})_blocks")


def check_z_on_monad_morphism(src: Centralizer, dst: Centralizer, f: NatTrans,
                              max_tuples: Optional[int] = None,
                              report: Optional[Report] = None) -> Report:
    """The defining identity of ``Z(f)`` and its agreement with the block formula."""
    report = report if report is not None else Report(f"check-z-morphism:{f.name}")
    cat = src.cat
    Zf = z_on_monad_morphism(src, dst, f)
    blocks = z_on_monad_morphism_blocks(src, dst, f)
    for (i, k) in _tuples(cat, 2, max_tuples):
        X, Y = (i,), (k,)
        loc = location_of(i, k)
        zx = nat_component(Zf, X)
        report.compare("z_morphism_defining", loc,
                       tensor(dst.T.obj(Y), zx, cat) @ dst.partial_at(X, Y),
                       tensor(nat_component(f, Y), src.functor.obj(X), cat) @ src.partial_at(X, Y))
    for (i,) in _tuples(cat, 1, max_tuples):
        report.compare("z_morphism_blocks", location_of(i), Zf.at(i), blocks.at(i))
    report.note("z_on_monad_morphism")
    return report


def check_z_contravariant(first: Centralizer, middle: Centralizer, last: Centralizer,
                          f: NatTrans, g: NatTrans, gf: NatTrans,
                          max_tuples: Optional[int] = None) -> Report:
    """``Z(g ∘ f) = Z(f) ∘ Z(g)`` for ``f: T → T'`` and ``g: T' → T''``."""
    report = Report(f"check-z-contravariant:{gf.name}")
    Zf = z_on_monad_morphism(first, middle, f)
    Zg = z_on_monad_morphism(middle, last, g)
    Zgf = z_on_monad_morphism(first, last, gf)
    for (i,) in _tuples(first.cat, 1, max_tuples):
        report.compare("z_contravariant", location_of(i), Zgf.at(i), Zf.at(i) @ Zg.at(i))
    report.note("check_z_contravariant")
    return report


# coends of module categories

def coend_of_module_category(cent: Centralizer, Omega: NatTrans,
                             report: Optional[Report] = None):
    """
    The coend ``(Z_T(1), α = Z_T(T0) Ω_1)`` of the category of T-modules.

    ``α`` is also solved from ``α T(i_Y) = i_{TY}(∨μ_Y s^l_{TY} T(∨μ_Y) ⊗ id) T2(∨TY, Y)``
    and the two routes are compared.
    """

    cat, T, Z = cent.cat, cent.T, cent.Z
    report = report if report is not None else Report(f"coend-module-category:{T.name}")
    alpha = Z.mor(T.T0) @ nat_component(Omega, UNIT)
    lhs, rhs = [], []
    for j in cat.simples:
        Y = (j,)
        TY = T.obj(Y)
        dmu = dual_mor(T.mu_at(Y))
        g = compose_all(dmu, T.sl_at(TY), T.mor(dmu))
        lhs.append(T.mor(cent.i_at(UNIT, Y)))
        rhs.append(compose_all(cent.i_at(UNIT, TY), tensor(g, TY, cat),
                               T.T2_at(dual_obj(cat, TY), Y)))
    report.compare("coend_action_routes", "1", alpha, solve_left(hconcat(lhs), hconcat(rhs)))
    module = TModule(Z.obj(UNIT), alpha)
    check_tmodule(T, module, report)
    report.note("coend_of_module_category")
    return module


@dataclass
class CoendHopf:
    """A Hopf algebra in the category of T-modules with its Hopf pairing."""

    T: HopfMonad
    module: object
    m: Mor
    u: Mor
    delta: Mor
    eps: Mor
    S: Mor
    S_inv: Mor
    omega: Mor
    braiding: Mor
    centralizer: Optional[Centralizer] = None

    @property
    def C(self) -> Obj:
        return self.module.M


def _coaction(cent: Centralizer, mod) -> Mor:
    """``δ_M = (r ⊗ id_C) ∂_{1,M}``."""
    return tensor(mod.action, cent.functor.obj(UNIT), cent.cat) @ cent.partial_at(UNIT, mod.M)


def _solve_from_coaction(cent: Centralizer, T: HopfMonad, R: NatTrans, coend_mod):
    """Product and pairing of the coend from the coaction on free modules."""

    cat = cent.cat
    C = coend_mod.M
    CC = tensor_obj(cat, C, C)
    frees = [(k, free_tmodule(T, (k,))) for k in cat.simples]
    lhs, rhs_m, rhs_w = [], [], []
    for i, M in frees:
        for k, N in frees:
            MN = tmodule_tensor(T, M, N)
            seed = tensor(T.eta_at((i,)), T.eta_at((k,)))
            both = compose_all(
                tensor_all(cat, M.M, braiding_from_monad_rmatrix(T, R, coend_mod, N), C),
                tensor(_coaction(cent, M), _coaction(cent, N)),
                seed,
            )
            lhs.append(bend(both, MN.M, CC))
            rhs_m.append(bend(_coaction(cent, MN) @ seed, MN.M, C))
            double = (braiding_from_monad_rmatrix(T, R, N, M)
                      @ braiding_from_monad_rmatrix(T, R, M, N))
            rhs_w.append(bend(double @ seed, MN.M, UNIT))
    left = hconcat(lhs)
    return solve_left(left, hconcat(rhs_m)), solve_left(left, hconcat(rhs_w))


def _convolution_inverse(cat, C: Obj, m: Mor, u: Mor, delta: Mor, eps: Mor) -> Mor:
    return solve_linear_map(C, C, lambda g: compose_all(m, tensor(g, C, cat), delta), u @ eps)


def coend_hopf(T: HopfMonad, R: NatTrans, max_tuples: Optional[int] = None,
               report: Optional[Report] = None) -> Tuple[CoendHopf, Report]:
    """
    The Hopf algebra structure of the coend of T-modules for a
    quasitriangular ``T``.

    Coproduct, counit and unit come from ``Z_T``; product, pairing and
    antipode are solved from the universal coaction.
    """

    report = report if report is not None else Report(f"coend-hopf:{T.name}")
    check_monad_rmatrix(T, R, max_tuples, report)
    cent = centralize(T)
    Omega, certificate = canonical_law(cent, max_tuples)
    report.extend(certificate)
    module = coend_of_module_category(cent, Omega, report)
    cat, Z = cent.cat, cent.Z
    C = module.M
    delta = Z.T2_at(UNIT, UNIT)
    eps = Z.T0
    u = Z.eta_at(UNIT)
    m, omega = _solve_from_coaction(cent, T, R, module)
    S = _convolution_inverse(cat, C, m, u, delta, eps)
    coend = CoendHopf(T, module, m, u, delta, eps, S, inverse(S), omega,
                      braiding_from_monad_rmatrix(T, R, module, module), cent)
    check_coend_hopf(cent, coend, report)
    report.note("coend_hopf")
    return coend, report


def check_coend_hopf(cent: Centralizer, coend: CoendHopf, report: Report) -> Report:
    """Hopf axioms in T-modules, T-linearity, coaction laws and the Hopf pairing."""

    cat, T = cent.cat, coend.T
    C, c = coend.C, coend.braiding
    check_hopf_axioms(cat, C, coend.m, coend.u, coend.delta, coend.eps, coend.S, coend.S_inv,
                      c, report)
    mod = coend.module
    CC = tmodule_tensor(T, mod, mod)
    one = unit_tmodule(T)

    def linear(name, f, M, N):
        report.compare("linear_" + name, "C", f @ M.action, N.action @ T.mor(f))

    linear("m", coend.m, CC, mod)
    linear("u", coend.u, one, mod)
    linear("delta", coend.delta, mod, CC)
    linear("eps", coend.eps, mod, one)
    linear("S", coend.S, mod, mod)
    for k in cat.simples:
        M = free_tmodule(T, (k,))
        delta_M = _coaction(cent, M)
        report.compare("coaction_coassociative", location_of(k),
                       tensor(M.M, coend.delta, cat) @ delta_M,
                       tensor(delta_M, C, cat) @ delta_M)
        report.compare("coaction_counit", location_of(k),
                       tensor(M.M, coend.eps, cat) @ delta_M, identity(cat, M.M))
    check_hopf_pairing(cat, C, coend.m, coend.u, coend.delta, coend.eps, coend.S, coend.omega,
                       c, report)
    return report


def coend_injection(cent: Centralizer, mod) -> Mor:
    """``j_M = (ev_M ⊗ id_C)(id ⊗ δ_M): ∨M ⊗ M → C``."""
    return bend(_coaction(cent, mod), mod.M, cent.functor.obj(UNIT))


def pairing_closed_form_modules(coend: CoendHopf, R: NatTrans, M, N) -> Mor:
    """``(ev_M ⊗ ev_N)(id ⊗ (c_{∨N,M} c_{M,∨N})⁻¹ ⊗ id): ∨M ⊗ M ⊗ ∨N ⊗ N → 1``."""
    T = coend.T
    cat = T.cat
    DN = tmodule_dual(T, N)
    twist = inverse(braiding_from_monad_rmatrix(T, R, DN, M)
                    @ braiding_from_monad_rmatrix(T, R, M, DN))
    return compose_all(tensor(ev(cat, M.M), ev(cat, N.M)),
                       tensor_all(cat, dual_obj(cat, M.M), twist, N.M))


def check_coend_universal(cent: Centralizer, coend: CoendHopf, R: NatTrans,
                          max_tuples: Optional[int] = None,
                          report: Optional[Report] = None) -> Report:
    """
    The product and pairing of a coend against the universal coaction on
    dual modules, which the solver never sees, and the pairing against its
    closed form on free modules.
    """
    T = coend.T
    cat, C = T.cat, coend.C
    report = report if report is not None else Report(f"coend-universal:{T.name}")
    frees = {k: free_tmodule(T, (k,)) for k in cat.simples}
    duals = {k: tmodule_dual(T, frees[k]) for k in cat.simples}
    for (i, k) in _tuples(cat, 2, max_tuples):
        loc = location_of(i, k)
        M, N = duals[i], duals[k]
        MN = tmodule_tensor(T, M, N)
        both = compose_all(
            tensor_all(cat, M.M, braiding_from_monad_rmatrix(T, R, coend.module, N), C),
            tensor(_coaction(cent, M), _coaction(cent, N)),
        )
        report.compare("coend_product_universal", loc,
                       tensor(MN.M, coend.m, cat) @ both, _coaction(cent, MN))
        report.compare("coend_pairing_universal", loc, tensor(MN.M, coend.omega, cat) @ both,
                       braiding_from_monad_rmatrix(T, R, N, M)
                       @ braiding_from_monad_rmatrix(T, R, M, N))
        F, G = frees[i], frees[k]
        report.compare("coend_pairing_closed_form", loc,
                       coend.omega @ tensor(coend_injection(cent, F), coend_injection(cent, G)),
                       pairing_closed_form_modules(coend, R, F, G))
    return report


def coend_of_center(cat, max_tuples: Optional[int] = None) -> Tuple[CoendHopf, Report]:
    """
    The coend of the centre ``Z(C)``, computed twice: through ``Z_D`` for the
    double of the identity monad, and entirely from the universal coaction.
    The product and pairing are checked on dual modules and against the
    closed form of the pairing.
    """

    report = Report(f"coend-of-center:{cat.name}")
    base = centralize(identity_monad(cat))
    Omega, certificate = canonical_law(base, max_tuples)
    report.extend(certificate)
    D, R = double(base, Omega)
    coend, inner = coend_hopf(D, R, max_tuples)
    report.extend(inner)
    cent = coend.centralizer
    C = coend.C
    CC = tensor_obj(cat, C, C)
    lhs, rhs_d, rhs_e = [], [], []
    for k in cat.simples:
        M = free_tmodule(D, (k,))
        delta_M = _coaction(cent, M) @ D.eta_at((k,))
        twice = tensor(_coaction(cent, M), C, cat) @ delta_M
        lhs.append(bend(delta_M, M.M, C))
        rhs_d.append(bend(twice, M.M, CC))
        rhs_e.append(bend(D.eta_at((k,)), M.M, UNIT))
    delta = solve_left(hconcat(lhs), hconcat(rhs_d))
    eps = solve_left(hconcat(lhs), hconcat(rhs_e))
    u = solve_linear_map(UNIT, C, lambda g: coend.m @ tensor(g, C, cat), identity(cat, C))
    S = _convolution_inverse(cat, C, coend.m, u, delta, eps)
    for name, ours, theirs in [("delta", delta, coend.delta), ("eps", eps, coend.eps),
                               ("u", u, coend.u), ("S", S, coend.S)]:
        report.compare("center_routes_agree", name, ours, theirs)
    check_coend_universal(cent, coend, R, max_tuples, report)
    report.note("coend_of_center")
    Logger().log_pipeline(report)
    return coend, report
