"""
Coends of braided instances, centralizer Hopf algebras ``Z(A)``, canonical
laws of Hopf algebras and their doubles ``D(A) = A ⊗_Ω Z(A)``.

Over a braided instance every centralizer is represented: ``Z_T ≅ ? ⊗ C_T``.
The isomorphism ``φ_X: Z_T(X) → X ⊗ C_T`` is read off from the coaction
and carries the structure of ``Z_T`` to a Hopf algebra on ``C_T``.
"""

from collections import defaultdict
from dataclasses import dataclass
from functools import partial
from typing import Dict, Optional, Tuple
from app.centralizer import Centralizer, canonical_law, centralize, double
from app.distributive import invert_law
from app.exceptions import CategoryError, NotBraidedError
from app.functors import NatTrans, nat_component
from app.hopfalg import (
    HopfAlgebra,
    check_algebra_rmatrix,
    check_hopf_algebra,
    check_hopf_axioms,
    check_hopf_pairing,
    classical_dual_cop,
    transport_hopf,
    unit_algebra,
)
from app.hopfmonad import (
    HopfMonad,
    _tuples,
    hopf_monad_from_algebra,
    identity_monad,
    rmatrix_transformation,
)
from app.linalg import bend, hconcat, inverse, solve_left, unbend
from app.logger import Logger
from app.report import Report, location_of
from app.semicat import (
    UNIT,
    CategorySpec,
    Mor,
    Obj,
    braid,
    coev,
    compose_all,
    dual_mor,
    dual_obj,
    dual_tensor_iso_inv,
    ev,
    random_morphism,
    random_object,
    tensor,
    tensor_all,
    tensor_obj,
    tensor_permutation,
)


def drop_unit(cat: CategorySpec, X: Obj) -> Mor:
    """The canonical ``X ⊗ 1 ≅ X``, the only unit reindexing used between routes."""
    return Mor(cat, tensor_obj(cat, X, UNIT), X, {(p, p): cat.field.one for p in range(len(X))})


# the representation read-off

class ReadOff:
    """
    The isomorphism ``Z_T ≅ ? ⊗ C_T`` of a centralizer over a braided instance.

    ``φ_X`` is the unique solution of ``(id ⊗ φ_X) ∂_{X,Y} = ∂^br_{X,Y}``
    where ``∂^br_{X,Y} = (τ_{X,T(Y)} ⊗ id_C)(id_X ⊗ ∂_{1,Y})``.
    """

    def __init__(self, cent: Centralizer):
        cat = cent.cat
        if not cat.is_braided:
            raise NotBraidedError(f"{cat.name} carries no braiding")
        self.cent = cent
        self.cat = cat
        self.C = cent.Z.obj(UNIT)
        self._phi: Dict[Obj, Mor] = {}
        self._phi_inv: Dict[Obj, Mor] = {}

    def delta(self, Y: Obj) -> Mor:
        """The universal coaction ``Y → T(Y) ⊗ C_T``."""
        return self.cent.partial_at(UNIT, Y)

    def braided_partial(self, X: Obj, Y: Obj) -> Mor:
        cat = self.cat
        TY = self.cent.T.obj(Y)
        return tensor(braid(cat, X, TY), self.C, cat) @ tensor(X, self.delta(Y), cat)

    def phi(self, X: Obj) -> Mor:
        X = tuple(X)
        if X not in self._phi:
            xis = [self.braided_partial(X, (k,)) for k in self.cat.simples]
            self._phi[X] = self.cent.factor(X, xis, tensor_obj(self.cat, X, self.C))
        return self._phi[X]

    def phi_inv(self, X: Obj) -> Mor:
        X = tuple(X)
        if X not in self._phi_inv:
            self._phi_inv[X] = inverse(self.phi(X))
        return self._phi_inv[X]

    def hopf_algebra(self, name: Optional[str] = None) -> HopfAlgebra:
        """The structure of ``Z_T`` at the unit carried to ``C_T``."""
        cat, Z, C = self.cat, self.cent.Z, self.C
        phi1, phi1_inv = self.phi(UNIT), self.phi_inv(UNIT)
        m = compose_all(phi1, Z.mu_at(UNIT), inverse(self.phi(C) @ Z.mor(phi1)))
        u = phi1 @ Z.eta_at(UNIT)
        delta = compose_all(tensor(phi1, phi1), Z.T2_at(UNIT, UNIT), phi1_inv)
        eps = Z.T0 @ phi1_inv
        DC = dual_obj(cat, C)
        s_left = compose_all(Z.sl_at(UNIT), Z.mor(dual_mor(phi1)), self.phi_inv(DC))
        S_inv = unbend(s_left, C, C)
        return HopfAlgebra(cat, C, m, u, delta, eps, inverse(S_inv), S_inv,
                           name=name or f"C[{self.cent.T.name}]")


def check_representation(read: ReadOff, CT: HopfAlgebra, max_tuples: Optional[int] = None,
                         report: Optional[Report] = None) -> Report:
    """``φ`` is an isomorphism of Hopf monads ``Z_T → ? ⊗ C_T`` compatible with ``∂``."""
    report = report if report is not None else Report(f"check-representation:{CT.name}")
    cat, cent, Z = read.cat, read.cent, read.cent.Z
    R = hopf_monad_from_algebra(CT, "right")
    for (i,) in _tuples(cat, 1, max_tuples):
        X = (i,)
        loc = location_of(i)
        phi = read.phi(X)
        RX = R.obj(X)
        report.compare("representation_mu", loc, phi @ Z.mu_at(X),
                       compose_all(R.mu_at(X), read.phi(RX), Z.mor(phi)))
        report.compare("representation_eta", loc, phi @ Z.eta_at(X), R.eta_at(X))
        report.compare("representation_sl", loc, Z.sl_at(X) @ Z.mor(dual_mor(phi)),
                       R.sl_at(X) @ read.phi(dual_obj(cat, RX)))
        report.compare("representation_sr", loc, Z.sr_at(X) @ Z.mor(dual_mor(phi, "right")),
                       R.sr_at(X) @ read.phi(dual_obj(cat, RX)))
    for (i, j) in _tuples(cat, 2, max_tuples):
        X, Y = (i,), (j,)
        loc = location_of(i, j)
        report.compare("representation_T2", loc,
                       tensor(read.phi(X), read.phi(Y)) @ Z.T2_at(X, Y),
                       R.T2_at(X, Y) @ read.phi(tensor_obj(cat, X, Y)))
        report.compare("representation_coaction", loc,
                       tensor(cent.T.obj(Y), read.phi(X), cat) @ cent.partial_at(X, Y),
                       read.braided_partial(X, Y))
    report.compare("representation_T0", "1", Z.T0, R.T0 @ read.phi(UNIT))
    report.note("check_representation")
    return report


def coend_hopf_of_monad(T: HopfMonad, max_tuples: Optional[int] = None) -> Tuple[HopfAlgebra, Report]:
    """
    The Hopf algebra ``C_T`` representing ``Z_T`` on the right, with its
    axiom suite and the representation check.
    """
    report = Report(f"coend-hopf-of-monad:{T.name}")
    read = ReadOff(centralize(T))
    CT = read.hopf_algebra()
    report.extend(check_hopf_algebra(CT))
    check_representation(read, CT, max_tuples, report)
    report.note("coend_hopf_of_monad")
    Logger().log_pipeline(report)
    return CT, report


# the coend of a braided instance

@dataclass
class Coend:
    """
    The coend ``C = ⊕_i ∨V_i ⊗ V_i`` of a braided instance, its Hopf
    structure and its Hopf pairing ``ω``.
    """

    cat: CategorySpec
    hopf: HopfAlgebra
    omega: Mor
    read: ReadOff

    @property
    def C(self) -> Obj:
        return self.hopf.A

    def i_component(self, j: int) -> Mor:
        """The injection ``∨V_j ⊗ V_j → C``."""
        return self.read.cent.iota(0, j)

    def delta(self, Y: Obj) -> Mor:
        """The universal coaction ``δ_Y = (id ⊗ i_Y)(coev_Y ⊗ id): Y → Y ⊗ C``."""
        return self.read.delta(Y)


def _double_braiding(cat: CategorySpec, X: Obj, Y: Obj) -> Mor:
    return braid(cat, Y, X) @ braid(cat, X, Y)


def solve_pairing(cat: CategorySpec, C: Obj, delta, tau_CY) -> Mor:
    """
    The unique ``ω`` with
    ``(id ⊗ ω)(id_X ⊗ τ_{C,Y} ⊗ id_C)(δ_X ⊗ δ_Y) = τ_{Y,X} τ_{X,Y}`` on simples.
    """
    CC = tensor_obj(cat, C, C)
    lhs, rhs = [], []
    for i in cat.simples:
        for k in cat.simples:
            X, Y = (i,), (k,)
            XY = tensor_obj(cat, X, Y)
            both = tensor_all(cat, X, tau_CY(Y), C) @ tensor(delta(X), delta(Y))
            lhs.append(bend(both, XY, CC))
            rhs.append(bend(_double_braiding(cat, X, Y), XY, UNIT))
    return solve_left(hconcat(lhs), hconcat(rhs))


def pairing_closed_form(coend: Coend) -> Mor:
    """``ω(i_X ⊗ i_Y) = (ev_X ⊗ ev_Y)(id ⊗ (τ_{∨Y,X} τ_{X,∨Y})⁻¹ ⊗ id)`` on simples."""
    cat = coend.cat
    lhs, rhs = [], []
    for j in cat.simples:
        for k in cat.simples:
            X, Y = (j,), (k,)
            DX, DY = dual_obj(cat, X), dual_obj(cat, Y)
            twist = inverse(_double_braiding(cat, X, DY))
            lhs.append(tensor(coend.i_component(j), coend.i_component(k)))
            rhs.append(compose_all(tensor(ev(cat, X), ev(cat, Y)),
                                   tensor_all(cat, DX, twist, Y)))
    return solve_left(hconcat(lhs), hconcat(rhs))


def coend(cat: CategorySpec, report: Optional[Report] = None) -> Coend:
    """
    The coend of a braided instance with its Hopf structure and pairing.

    Raises:
        NotBraidedError: if the instance carries no braiding.
    """
    if not cat.is_braided:
        raise NotBraidedError(f"The coend needs a braided instance; {cat.name} has none")
    read = ReadOff(centralize(identity_monad(cat)))
    H = read.hopf_algebra(name=f"C[{cat.name}]")
    omega = solve_pairing(cat, H.A, read.delta, lambda Y: braid(cat, H.A, Y))
    result = Coend(cat, H, omega, read)
    if report is not None:
        check_coend(result, report)
    return result


def check_coend(coend: Coend, report: Optional[Report] = None,
                max_tuples: Optional[int] = None) -> Report:
    """Hopf axioms, the representation of ``Z``, the pairing axioms and both pairing routes."""
    report = report if report is not None else Report(f"check-coend:{coend.cat.name}")
    cat, H = coend.cat, coend.hopf
    tau = H.tau(H.A, H.A)
    check_hopf_axioms(cat, H.A, H.m, H.u, H.delta, H.eps, H.S, H.S_inv, tau, report)
    check_representation(coend.read, H, max_tuples, report)
    check_hopf_pairing(cat, H.A, H.m, H.u, H.delta, H.eps, H.S, coend.omega, tau, report)
    report.compare("pairing_closed_form", "C", coend.omega, pairing_closed_form(coend))
    report.expect("pairing_symmetry", cat.name,
                  (coend.omega == H.eps @ tensor(H.eps, H.A, cat)) == cat.is_symmetric(),
                  "omega = eps ⊗ eps must hold exactly for symmetric instances")
    report.note("coend")
    return report


def check_coaction_naturality(coend: Coend, rng, samples: int = 3,
                              report: Optional[Report] = None) -> Report:
    """``(f ⊗ id_C) δ_X = δ_Y f`` on seeded random morphisms."""
    report = report if report is not None else Report(f"coaction-naturality:{coend.cat.name}")
    cat = coend.cat
    for _ in range(samples):
        X, Y = random_object(cat, rng, 2), random_object(cat, rng, 2)
        f = random_morphism(cat, rng, X, Y)
        report.compare("coaction_natural", (X, Y), tensor(f, coend.C, cat) @ coend.delta(X),
                       coend.delta(Y) @ f)
    return report


# centralizer Hopf algebras and canonical laws

@dataclass
class AlgebraCentralizer:
    """``Z(A)`` on ``∨A ⊗ C`` with the data it was read off from."""

    A: HopfAlgebra
    ZA: HopfAlgebra
    T: HopfMonad
    read: ReadOff
    Pi: Mor
    coend: Coend


def _carrier_transport(H: HopfAlgebra, read: ReadOff, coend: Coend) -> Mor:
    """``Π: C_{?⊗A} = ⊕_j ∨(V_j ⊗ A) ⊗ V_j → ∨A ⊗ C``."""
    cat, A = H.cat, H.A
    DA = dual_obj(cat, A)
    pieces = []
    for j in cat.simples:
        V = (j,)
        pieces.append(compose_all(tensor(DA, coend.i_component(j), cat),
                                  tensor(dual_tensor_iso_inv(cat, V, A), V, cat)))
    Pi = hconcat(pieces)
    if Pi.src != read.C:
        raise CategoryError("Centralizer carrier does not split over the simples")
    return Pi


def centralizer_algebra(H: HopfAlgebra, coend_data: Optional[Coend] = None,
                        report: Optional[Report] = None) -> AlgebraCentralizer:
    """
    The Hopf algebra ``Z(A)`` on ``∨A ⊗ C`` representing the centralizer of ``? ⊗ A``.

    Over Vec it is compared entry by entry with ``(A*)^cop``.
    """
    cat = H.cat
    coend_data = coend_data if coend_data is not None else coend(cat)
    T = hopf_monad_from_algebra(H, "right")
    read = ReadOff(centralize(T))
    Pi = _carrier_transport(H, read, coend_data)
    ZA = transport_hopf(read.hopf_algebra(), Pi, name=f"Z({H.name})")
    if report is not None:
        report.extend(check_hopf_algebra(ZA))
        if cat.kind == "vec":
            compare_with_classical_dual(H, ZA, report)
        report.note("centralizer_algebra")
    return AlgebraCentralizer(H, ZA, T, read, Pi, coend_data)


def compare_with_classical_dual(H: HopfAlgebra, ZA: HopfAlgebra, report: Report) -> Report:
    """Entry-by-entry comparison of ``Z(A)`` with ``(A*)^cop`` after dropping the unit factor."""
    cat = H.cat
    classical = classical_dual_cop(H)
    flat = transport_hopf(ZA, drop_unit(cat, classical.A))
    for key in ("m", "u", "delta", "eps", "S", "S_inv"):
        report.compare("classical_dual_cop", key, getattr(flat, key), getattr(classical, key))
    return report


def check_algebra_law(Omega: Mor, B: HopfAlgebra, A: HopfAlgebra,
                      report: Optional[Report] = None) -> Report:
    """Distributive-law equations, comultiplicativity and counitality of ``Ω: B ⊗ A → A ⊗ B``."""
    report = report if report is not None else Report("check-algebra-law")
    cat = A.cat
    a, b = A.A, B.A
    report.compare("law_mult_outer", "B", Omega @ tensor(B.m, a, cat),
                   compose_all(tensor(a, B.m, cat), tensor(Omega, b, cat), tensor(b, Omega, cat)))
    report.compare("law_unit_outer", "B", Omega @ tensor(B.u, a, cat), tensor(a, B.u, cat))
    report.compare("law_mult_inner", "A", Omega @ tensor(b, A.m, cat),
                   compose_all(tensor(A.m, b, cat), tensor(a, Omega, cat), tensor(Omega, a, cat)))
    report.compare("law_unit_inner", "A", Omega @ tensor(b, A.u, cat), tensor(A.u, b, cat))
    report.compare(
        "law_comultiplicative", "A⊗B",
        compose_all(tensor_all(cat, a, A.tau(a, b), b), tensor(A.delta, B.delta), Omega),
        compose_all(tensor(Omega, Omega), tensor_all(cat, b, A.tau(b, a), a),
                    tensor(B.delta, A.delta)),
    )
    report.compare("law_counit", "A⊗B", tensor(A.eps, B.eps) @ Omega, tensor(B.eps, A.eps))
    report.note("check_algebra_law")
    return report


def law_inverse_formula(Omega: Mor, B: HopfAlgebra, A: HopfAlgebra) -> Mor:
    """``Ω⁻¹ = (S_B⁻¹ ⊗ S_A⁻¹) τ_{B,A}⁻¹ Ω τ_{A,B} (S_A ⊗ S_B)`` for ``Ω: B ⊗ A → A ⊗ B``."""
    a, b = A.A, B.A
    return compose_all(tensor(B.S_inv, A.S_inv), inverse(A.tau(b, a)), Omega, A.tau(a, b),
                       tensor(A.S, B.S))


@dataclass
class AlgebraLaw:
    """The canonical law ``Ω: Z(A) ⊗ A → A ⊗ Z(A)`` and its inverse from the antipode formula."""

    centralizer: AlgebraCentralizer
    Omega: Mor
    Omega_inv: Mor
    monad_law: NatTrans


def canonical_law_algebra(H: HopfAlgebra, coend_data: Optional[Coend] = None,
                          report: Optional[Report] = None,
                          max_tuples: Optional[int] = None) -> AlgebraLaw:
    """
    The canonical distributive law of ``A`` read off from the canonical law
    of ``? ⊗ A``, with its certificate.

    Raises:
        FalsificationError: if the certificate fails.
    """
    report = report if report is not None else Report(f"canonical-law-algebra:{H.name}")
    zc = centralizer_algebra(H, coend_data, report)
    cat, read, Pi = H.cat, zc.read, zc.Pi
    cent = read.cent
    monad_law, certificate = canonical_law(cent, max_tuples)
    report.extend(certificate)
    A = H.A
    to_B = Pi @ read.phi(UNIT)
    from_B = inverse(to_B)
    Omega = compose_all(tensor(A, Pi, cat), read.phi(A), nat_component(monad_law, UNIT),
                        tensor(from_B, A, cat))
    formula = nat_component(invert_law(cent.Z, cent.T, monad_law), UNIT)
    Omega_inv = compose_all(tensor(to_B, A, cat), formula, read.phi_inv(A),
                            tensor(A, inverse(Pi), cat))
    check_algebra_law(Omega, zc.ZA, H, report)
    exact = inverse(Omega)
    report.compare("law_inverse_exact", "A", Omega_inv, exact)
    report.compare("law_inverse_hopf_formula", "A", law_inverse_formula(Omega, zc.ZA, H), exact)
    report.note("canonical_law_algebra")
    Logger().log_pipeline(report)
    report.raise_if_failed(f"Canonical law of {H.name} failed its certificate")
    return AlgebraLaw(zc, Omega, Omega_inv, monad_law)


# the double D(A) = A ⊗_Ω Z(A)

@dataclass
class BraidedDouble:
    """``A``, ``Z(A)``, the canonical law and the quasitriangular double ``D(A)``."""

    A: HopfAlgebra
    ZA: HopfAlgebra
    Omega: Mor
    DA: HopfAlgebra
    r: Mor
    law: AlgebraLaw

    @property
    def coend(self) -> Coend:
        return self.law.centralizer.coend


def double_rmatrix(H: HopfAlgebra, ZA: HopfAlgebra, coend_data: Coend) -> Mor:
    """
    ``𝔯 = (id_A ⊗ u_{Z(A)} ⊗ u_A ⊗ id_{∨A ⊗ C})(coev_A ⊗ ε_C ⊗ id_C): C ⊗ C → D(A) ⊗ D(A)``.

    Over Vec this is ``Σ_i (e_i ⊗ ε) ⊗ (1 ⊗ e^i)`` with ``e^i`` the dual basis.
    """
    cat, A = H.cat, H.A
    C = coend_data.hopf
    seed = tensor_all(cat, coev(cat, A), C.eps, C.A)
    return tensor_all(cat, A, ZA.u, H.u, ZA.A) @ seed


def double_algebra(H: HopfAlgebra, coend_data: Optional[Coend] = None,
                   max_tuples: Optional[int] = None) -> Tuple[BraidedDouble, Report]:
    """
    ``D(A)`` with product ``(m_A ⊗ m_Z)(id ⊗ Ω ⊗ id)``, the tensor coalgebra
    structure, antipode ``Ω(S_Z ⊗ S_A)τ_{A,Z(A)}`` and R-matrix ``𝔯``.
    """
    cat = H.cat
    report = Report(f"double-algebra:{H.name}")
    coend_data = coend_data if coend_data is not None else coend(cat)
    law = canonical_law_algebra(H, coend_data, report, max_tuples)
    ZA, Omega = law.centralizer.ZA, law.Omega
    a, b = H.A, ZA.A
    D = tensor_obj(cat, a, b)
    m = compose_all(tensor(H.m, ZA.m), tensor_all(cat, a, Omega, b))
    u = tensor(H.u, ZA.u)
    delta = tensor_all(cat, a, H.tau(a, b), b) @ tensor(H.delta, ZA.delta)
    eps = tensor(H.eps, ZA.eps)
    S = compose_all(Omega, tensor(ZA.S, H.S), H.tau(a, b))
    DA = HopfAlgebra(cat, D, m, u, delta, eps, S, inverse(S), name=f"D({H.name})",
                     mirror=H.mirror)
    r = double_rmatrix(H, ZA, coend_data)
    report.extend(check_hopf_algebra(DA))
    report.extend(check_algebra_rmatrix(DA, r, coend_data))
    if cat.kind == "vec":
        check_yang_baxter(DA, r, report)
    report.note("double_algebra")
    Logger().log_pipeline(report)
    return BraidedDouble(H, ZA, Omega, DA, r, law), report


# R-matrices of algebras as R-matrices of monads

def _rho(coend_data: Coend, X: Obj, Y: Obj) -> Mor:
    """``(τ_{X⊗C,Y} ⊗ id_C)(δ_X ⊗ δ_Y): X ⊗ Y → Y ⊗ X ⊗ C ⊗ C``."""
    cat, C = coend_data.cat, coend_data.C
    XC = tensor_obj(cat, X, C)
    return tensor(braid(cat, XC, Y), C, cat) @ tensor(coend_data.delta(X), coend_data.delta(Y))


def encode_rmatrix(H: HopfAlgebra, r: Mor, coend_data: Coend, T: HopfMonad) -> NatTrans:
    """
    The R-matrix of ``T = ? ⊗ A`` encoding ``𝔯: C ⊗ C → A ⊗ A``:
    ``R_{X,Y} = (id_Y ⊗ τ_{X,A} ⊗ id_A)(id_{Y⊗X} ⊗ 𝔯) ρ_{X,Y}``.
    """
    cat, A = H.cat, H.A

    def component(i, j):
        X, Y = (i,), (j,)
        YX = tensor_obj(cat, Y, X)
        return compose_all(tensor_all(cat, Y, H.tau(X, A), A), tensor(YX, r, cat),
                           _rho(coend_data, X, Y))

    return rmatrix_transformation(T, component, "E(r)")


def decode_rmatrix(H: HopfAlgebra, R: NatTrans, coend_data: Coend) -> Mor:
    """Recover ``𝔯`` from an R-matrix of ``? ⊗ A`` by factorization."""
    cat, A = H.cat, H.A
    C = coend_data.C
    CC, AA = tensor_obj(cat, C, C), tensor_obj(cat, A, A)
    lhs, rhs = [], []
    for i in cat.simples:
        for j in cat.simples:
            X, Y = (i,), (j,)
            YX = tensor_obj(cat, Y, X)
            target = tensor_all(cat, Y, H.tau(A, X, inverse=True), A) @ R.at(i, j)
            lhs.append(bend(_rho(coend_data, X, Y), YX, CC))
            rhs.append(bend(target, YX, AA))
    return solve_left(hconcat(lhs), hconcat(rhs))


def _triple_product(H: HopfAlgebra, x: Mor, y: Mor) -> Mor:
    """The product of two elements ``1 → H^{⊗3}``, factor by factor on sparse entries."""
    f, n = H.cat.field, H.dim
    columns = defaultdict(list)
    for (row, col), v in H.m.entries.items():
        columns[col].append((row, v))
    out: Dict[Tuple[int, int], object] = {}
    for (p, _), a in x.entries.items():
        ps = (p // (n * n), (p // n) % n, p % n)
        for (q, _), b in y.entries.items():
            qs = (q // (n * n), (q // n) % n, q % n)
            ab = f.mul(a, b)
            for r1, v1 in columns[ps[0] * n + qs[0]]:
                for r2, v2 in columns[ps[1] * n + qs[1]]:
                    for r3, v3 in columns[ps[2] * n + qs[2]]:
                        key = ((r1 * n + r2) * n + r3, 0)
                        term = f.mul(ab, f.mul(v1, f.mul(v2, v3)))
                        out[key] = f.add(out.get(key, f.zero), term)
    return Mor(H.cat, x.src, x.dst, {k: v for k, v in out.items() if v != f.zero}, check=False)


def check_yang_baxter(H: HopfAlgebra, r: Mor, report: Optional[Report] = None) -> Report:
    """``r₁₂ r₁₃ r₂₃ = r₂₃ r₁₃ r₁₂`` in ``H^{⊗3}``, for an element ``r: 1 → H ⊗ H`` over Vec."""
    report = report if report is not None else Report(f"yang-baxter:{H.name}")
    cat, A = H.cat, H.A
    if cat.kind != "vec":
        raise CategoryError("The Yang-Baxter check runs over Vec only")
    r12 = tensor(r, H.u)
    r23 = tensor(H.u, r)
    r13 = tensor_permutation(cat, [A, A, A], [0, 2, 1]) @ r12

    mult = partial(_triple_product, H)
    report.compare("yang_baxter", "r", mult(mult(r12, r13), r23), mult(mult(r23, r13), r12))
    report.note("check_yang_baxter")
    return report


# the double of ? ⊗ A against ? ⊗ D(A)

def consistency_double(bd: BraidedDouble, max_tuples: Optional[int] = None) -> Report:
    """
    Compare ``? ⊗ D(A)`` with the double ``D_T`` of ``T = ? ⊗ A`` through
    ``ψ_X = (id_{X⊗A} ⊗ Π) φ_{X⊗A}: D_T(X) → X ⊗ D(A)``.

    Raises:
        FalsificationError: if the two doubles disagree.
    """
    report = Report(f"consistency-double:{bd.A.name}")
    zc = bd.law.centralizer
    cat, read, Pi, A = bd.A.cat, zc.read, zc.Pi, bd.A.A
    cent = read.cent
    DT, RT = double(cent, bd.law.monad_law)
    M = hopf_monad_from_algebra(bd.DA, "right")
    RM = encode_rmatrix(bd.DA, bd.r, bd.coend, M)
    cache: Dict[Obj, Mor] = {}

    def psi(X: Obj) -> Mor:
        X = tuple(X)
        if X not in cache:
            XA = tensor_obj(cat, X, A)
            cache[X] = tensor(XA, Pi, cat) @ read.phi(XA)
        return cache[X]

    for (i,) in _tuples(cat, 1, max_tuples):
        X = (i,)
        loc = location_of(i)
        report.compare("double_mu", loc, psi(X) @ DT.mu_at(X),
                       compose_all(M.mu_at(X), psi(M.obj(X)), DT.mor(psi(X))))
        report.compare("double_eta", loc, psi(X) @ DT.eta_at(X), M.eta_at(X))
    for (i, j) in _tuples(cat, 2, max_tuples):
        X, Y = (i,), (j,)
        loc = location_of(i, j)
        report.compare("double_T2", loc, tensor(psi(X), psi(Y)) @ DT.T2_at(X, Y),
                       M.T2_at(X, Y) @ psi(tensor_obj(cat, X, Y)))
        report.compare("double_rmatrix", loc, tensor(psi(Y), psi(X)) @ RT.at(i, j), RM.at(i, j))
    report.compare("double_T0", "1", DT.T0, M.T0 @ psi(UNIT))
    report.note("consistency_double")
    Logger().log_pipeline(report)
    report.raise_if_failed(f"Doubles of {bd.A.name} disagree")
    return report


def check_double_of_unit(cat: CategorySpec, max_tuples: Optional[int] = None,
                         report: Optional[Report] = None) -> Report:
    """``D(𝟙)`` is the coend ``C`` itself, with ``𝔯 = u_C ε_C ⊗ id_C``."""
    report = report if report is not None else Report(f"double-of-unit:{cat.name}")
    data = coend(cat)
    C = data.hopf
    bd, inner = double_algebra(unit_algebra(cat), data, max_tuples)
    report.extend(inner)
    same_carrier = bd.DA.A == C.A
    report.expect("double_unit_carrier", cat.name, same_carrier, f"{bd.DA.A} != {C.A}")
    if same_carrier:
        for key in ("m", "u", "delta", "eps"):
            report.compare("double_unit_structure", key, getattr(bd.DA, key), getattr(C, key))
        report.compare("double_unit_rmatrix", cat.name, bd.r, tensor(C.u @ C.eps, C.A, cat))
    report.note("double_of_unit")
    return report
