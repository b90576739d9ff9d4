"""
Comonoidal distributive laws ``Ω: TP → PT`` and the composite Hopf monads
they produce.
"""

from dataclasses import dataclass
from typing import Optional
from app.functors import X0, Ap, NatTrans, compose_functors, nat_component
from app.hopfmonad import (
    HopfMonad,
    TModule,
    _tuples,
    check_tmodule,
    make_hopf_monad,
)
from app.linalg import inverse
from app.report import Report, location_of
from app.semicat import UNIT, Mor, Obj, compose_all, dual_mor, dual_obj, identity, tensor, tensor_obj


def law_transformation(P: HopfMonad, T: HopfMonad, component, name: str = "Omega") -> NatTrans:
    """A transformation ``TP → PT`` from its components at simples."""
    return NatTrans(P.cat, Ap(T.T, Ap(P.T, X0)), Ap(P.T, Ap(T.T, X0)), 1, component, name)


def check_distributive_law(Omega: NatTrans, P: HopfMonad, T: HopfMonad,
                           max_tuples: Optional[int] = None,
                           report: Optional[Report] = None) -> Report:
    """The four distributive-law identities and comonoidality of ``Ω``."""
    report = report if report is not None else Report(f"check-law:{Omega.name}")
    cat = P.cat
    for (i,) in _tuples(cat, 1, max_tuples):
        X = (i,)
        loc = location_of(i)
        PX, TX = P.obj(X), T.obj(X)
        om = nat_component(Omega, X)
        report.compare("law_mult_outer", loc, om @ T.mor(P.mu_at(X)),
                       compose_all(P.mu_at(TX), P.mor(om), nat_component(Omega, PX)))
        report.compare("law_unit_outer", loc, om @ T.mor(P.eta_at(X)), P.eta_at(TX))
        report.compare("law_mult_inner", loc, om @ T.mu_at(PX),
                       compose_all(P.mor(T.mu_at(X)), nat_component(Omega, TX), T.mor(om)))
        report.compare("law_unit_inner", loc, om @ T.eta_at(PX), P.mor(T.eta_at(X)))
    for (i, j) in _tuples(cat, 2, max_tuples):
        X, Y = (i,), (j,)
        XY = tensor_obj(cat, X, Y)
        pt2 = P.T2_at(T.obj(X), T.obj(Y)) @ P.mor(T.T2_at(X, Y))
        tp2 = T.T2_at(P.obj(X), P.obj(Y)) @ T.mor(P.T2_at(X, Y))
        report.compare("law_comonoidal", location_of(i, j), pt2 @ nat_component(Omega, XY),
                       tensor(nat_component(Omega, X), nat_component(Omega, Y)) @ tp2)
    report.compare("law_counit", "1",
                   compose_all(P.T0, P.mor(T.T0), nat_component(Omega, UNIT)),
                   T.T0 @ T.mor(P.T0))
    report.note("check_distributive_law")
    return report


def compose_with_law(P: HopfMonad, T: HopfMonad, Omega: NatTrans,
                     name: Optional[str] = None) -> HopfMonad:
    """
    The composite Hopf monad ``P ∘_Ω T``.

    Product ``m_{TX} P²(μ_X) P(Ω_{TX})``, unit ``u_{TX} η_X``, comonoidal
    data composed, antipodes ``S^l_X P(s^l_{PX}) PT(∨Ω_X)`` and the right
    analogue.
    """
    cat = P.cat
    F = compose_functors(P.T, T.T, name or f"{P.name}∘{T.name}")

    def mu(i):
        X = (i,)
        TX = T.obj(X)
        return compose_all(P.mu_at(TX), P.mor(P.mor(T.mu_at(X))),
                           P.mor(nat_component(Omega, TX)))

    def eta(i):
        X = (i,)
        return P.eta_at(T.obj(X)) @ T.eta_at(X)

    def T2(i, j):
        X, Y = (i,), (j,)
        return P.T2_at(T.obj(X), T.obj(Y)) @ P.mor(T.T2_at(X, Y))

    def sl(i):
        X = (i,)
        return compose_all(P.sl_at(X), P.mor(T.sl_at(P.obj(X))),
                           F.mor(dual_mor(nat_component(Omega, X))))

    def sr(i):
        X = (i,)
        return compose_all(P.sr_at(X), P.mor(T.sr_at(P.obj(X))),
                           F.mor(dual_mor(nat_component(Omega, X), "right")))

    return make_hopf_monad(F, mu, eta, T2, P.T0 @ P.mor(T.T0), sl, sr, F.name)


def check_middle_unit(P: HopfMonad, T: HopfMonad, PT: HopfMonad,
                      max_tuples: Optional[int] = None,
                      report: Optional[Report] = None) -> Report:
    """``p_X P(η_{PT(X)} u_{T(X)}) = id_{PT(X)}``."""
    report = report if report is not None else Report(f"check-middle-unit:{PT.name}")
    for (i,) in _tuples(P.cat, 1, max_tuples):
        X = (i,)
        TX = T.obj(X)
        inner = T.eta_at(PT.obj(X)) @ P.eta_at(TX)
        report.compare("middle_unit", location_of(i), PT.mu_at(X) @ P.mor(inner),
                       identity(P.cat, PT.obj(X)))
    report.note("check_middle_unit")
    return report


def invert_law(P: HopfMonad, T: HopfMonad, Omega: NatTrans) -> NatTrans:
    """
    The inverse of a comonoidal law built from the antipodes alone.

    With ``W = ∨TP(X)``:
    ``Ω⁻¹_X = S^r_W P(s^r_{P(W)}) PT(Ω^∨_W) PT(P(s^l_{P(X)})^∨) PT(S^{l∨}_X)``.
    """
    cat = P.cat
    F = compose_functors(P.T, T.T)

    def component(i):
        X = (i,)
        PX = P.obj(X)
        W = dual_obj(cat, T.obj(PX))
        return compose_all(
            P.sr_at(W),
            P.mor(T.sr_at(P.obj(W))),
            F.mor(dual_mor(nat_component(Omega, W), "right")),
            F.mor(dual_mor(P.mor(T.sl_at(PX)), "right")),
            F.mor(dual_mor(P.sl_at(X), "right")),
        )

    return NatTrans(cat, Ap(P.T, Ap(T.T, X0)), Ap(T.T, Ap(P.T, X0)), 1, component,
                    f"{Omega.name}^-1")


def check_law_inverse(P: HopfMonad, T: HopfMonad, Omega: NatTrans,
                      max_tuples: Optional[int] = None,
                      report: Optional[Report] = None) -> Report:
    """The antipode formula for ``Ω⁻¹`` against the matrix inverse."""
    report = report if report is not None else Report(f"check-law-inverse:{Omega.name}")
    inv = invert_law(P, T, Omega)
    for (i,) in _tuples(P.cat, 1, max_tuples):
        X = (i,)
        om = nat_component(Omega, X)
        formula = nat_component(inv, X)
        loc = location_of(i)
        report.compare("law_inverse_left", loc, formula @ om, identity(P.cat, om.src))
        report.compare("law_inverse_right", loc, om @ formula, identity(P.cat, om.dst))
        report.compare("law_inverse_exact", loc, formula, inverse(om))
    report.note("invert_law")
    return report


# modules over the composite

def lift_module(P: HopfMonad, Omega: NatTrans, mod: TModule) -> TModule:
    """The lift ``(P(M), P(r) Ω_M)`` of a T-module."""
    return TModule(P.obj(mod.M), P.mor(mod.action) @ nat_component(Omega, mod.M))


def check_lift(P: HopfMonad, T: HopfMonad, Omega: NatTrans, mod: TModule,
               report: Optional[Report] = None) -> Report:
    """The lifted module is a T-module and ``m_M``, ``u_M`` are T-linear."""
    report = report if report is not None else Report(f"check-lift:{P.name}")
    lifted = lift_module(P, Omega, mod)
    twice = lift_module(P, Omega, lifted)
    check_tmodule(T, lifted, report)
    loc = location_of(*mod.M)
    m, u = P.mu_at(mod.M), P.eta_at(mod.M)
    report.compare("lift_mult_linear", loc, m @ twice.action, lifted.action @ T.mor(m))
    report.compare("lift_unit_linear", loc, u @ mod.action, lifted.action @ T.mor(u))
    report.note("lift_module")
    return report


@dataclass
class CompositeModule:
    """A T-module together with a compatible action of the lifted ``P``."""

    module: TModule
    outer_action: Mor


def K(P: HopfMonad, pair: CompositeModule) -> TModule:
    """``K((M, r), s) = (M, s P(r))``."""
    return TModule(pair.module.M, pair.outer_action @ P.mor(pair.module.action))


def K_inv(P: HopfMonad, T: HopfMonad, mod: TModule) -> CompositeModule:
    """``K⁻¹(M, α) = ((M, α u_{T(M)}), α P(η_M))``."""
    M, alpha = mod.M, mod.action
    return CompositeModule(TModule(M, alpha @ P.eta_at(T.obj(M))), alpha @ P.mor(T.eta_at(M)))


def check_composite_modules(P: HopfMonad, T: HopfMonad, PT: HopfMonad, X: Obj,
                            report: Optional[Report] = None) -> Report:
    """``K`` and ``K⁻¹`` are mutually inverse on the free composite module on X."""
    report = report if report is not None else Report(f"check-composite-modules:{PT.name}")
    free = TModule(PT.obj(X), PT.mu_at(X))
    check_tmodule(PT, free, report)
    pair = K_inv(P, T, free)
    check_tmodule(T, pair.module, report)
    back = K(P, pair)
    loc = location_of(*X)
    report.compare("K_round_trip", loc, back.action, free.action)
    again = K_inv(P, T, back)
    report.compare("K_inverse_round_trip", loc, again.outer_action, pair.outer_action)
    report.compare("K_inverse_round_trip", loc, again.module.action, pair.module.action)
    report.note("composite_modules")
    return report
