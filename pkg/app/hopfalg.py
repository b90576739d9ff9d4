"""
Hopf algebras in a braided instance, their modules, and R-matrices.
"""

from dataclasses import dataclass, replace
from typing import Optional, Sequence
from app.exceptions import CategoryError, ModuleValidationError, NotBraidedError, ShapeError
from app.linalg import inverse
from app.report import Report
from app.semicat import (
    UNIT,
    CategorySpec,
    Mor,
    Obj,
    braid,
    coev,
    coev_right,
    compose_all,
    dual_obj,
    ev,
    ev_right,
    identity,
    inverse_table,
    tensor,
    tensor_all,
    tensor_obj,
)


@dataclass
class HopfAlgebra:
    """
    Structure morphisms of a Hopf algebra with invertible antipode.

    ``mirror`` marks an algebra living in the category with the reverse
    braiding; its ``tau`` then uses inverse braidings.
    """

    cat: CategorySpec
    A: Obj
    m: Mor
    u: Mor
    delta: Mor
    eps: Mor
    S: Mor
    S_inv: Mor
    name: str = "H"
    mirror: bool = False

    @property
    def dim(self) -> int:
        return len(self.A)

    def tau(self, X: Obj, Y: Obj, inverse: bool = False) -> Mor:
        if not self.cat.is_braided:
            raise NotBraidedError(f"{self.cat.name} carries no braiding")
        return braid(self.cat, X, Y, inverse=(inverse != self.mirror))

    def __repr__(self) -> str:
        return f"HopfAlgebra({self.name}, dim={self.dim})"


def unit_algebra(cat: CategorySpec) -> HopfAlgebra:
    """The trivial Hopf algebra on the unit object."""
    one = identity(cat, UNIT)
    return HopfAlgebra(cat, UNIT, one, one, one, one, one, one, name="1")


def group_algebra(cat: CategorySpec, cayley: Sequence[Sequence[int]], name: str = "kG") -> HopfAlgebra:
    """
    The group algebra of a finite group on ``n`` copies of the unit object.

    Index 0 of ``cayley`` is the identity element.
    """
    n = len(cayley)
    one = cat.field.one
    A = UNIT * n
    inv = inverse_table(cayley)
    AA = tensor_obj(cat, A, A)
    m = Mor(cat, AA, A, {(cayley[g][h], g * n + h): one for g in range(n) for h in range(n)})
    u = Mor(cat, UNIT, A, {(0, 0): one})
    delta = Mor(cat, A, AA, {(g * n + g, g): one for g in range(n)})
    eps = Mor(cat, A, UNIT, {(0, g): one for g in range(n)})
    S = Mor(cat, A, A, {(inv[g], g): one for g in range(n)})
    return HopfAlgebra(cat, A, m, u, delta, eps, S, S, name=name)


def sweedler_algebra(cat: CategorySpec) -> HopfAlgebra:
    """
    Sweedler's four-dimensional Hopf algebra with basis ``1, g, x, gx``.

    ``g² = 1``, ``x² = 0``, ``xg = -gx``, ``Δx = x ⊗ 1 + g ⊗ x``.
    """
    f = cat.field
    one, neg = f.one, f.neg(f.one)
    A = UNIT * 4
    AA = tensor_obj(cat, A, A)
    # basis products a * b -> (coefficient, index)
    table = {
        (1, 1): (one, 0), (1, 2): (one, 3), (1, 3): (one, 2),
        (2, 1): (neg, 3), (3, 1): (neg, 2),
    }
    m = {}
    for b in range(4):
        m[(b, b)] = one
        m[(b, b * 4)] = one
    for (a, b), (v, c) in table.items():
        m[(c, a * 4 + b)] = v
    delta = {
        (0, 0): one,
        (1 * 4 + 1, 1): one,
        (2 * 4 + 0, 2): one, (1 * 4 + 2, 2): one,
        (3 * 4 + 1, 3): one, (0 * 4 + 3, 3): one,
    }
    S = {(0, 0): one, (1, 1): one, (3, 2): neg, (2, 3): one}
    S_inv = {(0, 0): one, (1, 1): one, (3, 2): one, (2, 3): neg}
    return HopfAlgebra(
        cat, A,
        Mor(cat, AA, A, m),
        Mor(cat, UNIT, A, {(0, 0): one}),
        Mor(cat, A, AA, delta),
        Mor(cat, A, UNIT, {(0, 0): one, (0, 1): one}),
        Mor(cat, A, A, S),
        Mor(cat, A, A, S_inv),
        name="H4",
    )


def transport_hopf(H: HopfAlgebra, iso: Mor, name: Optional[str] = None) -> HopfAlgebra:
    """Move the structure of ``H`` along an isomorphism ``iso: H.A → B``."""
    if iso.src != H.A:
        raise ShapeError("transport_hopf: isomorphism must start at the carrier")
    back = inverse(iso)
    return replace(
        H,
        A=iso.dst,
        m=compose_all(iso, H.m, tensor(back, back)),
        u=iso @ H.u,
        delta=compose_all(tensor(iso, iso), H.delta, back),
        eps=H.eps @ back,
        S=compose_all(iso, H.S, back),
        S_inv=compose_all(iso, H.S_inv, back),
        name=name or H.name,
    )


def check_hopf_axioms(cat: CategorySpec, A: Obj, m: Mor, u: Mor, delta: Mor, eps: Mor,
                      S: Mor, S_inv: Mor, tau_AA: Mor, report: Report) -> Report:
    """
    The Hopf algebra axioms for the given structure maps.

    Only the self-braiding ``tau_AA`` of the carrier enters, so the same
    suite serves algebras in module categories.
    """
    AA = tensor_obj(cat, A, A)
    want = {
        'm': (AA, A), 'u': (UNIT, A), 'delta': (A, AA),
        'eps': (A, UNIT), 'S': (A, A), 'S_inv': (A, A),
    }
    got = {'m': m, 'u': u, 'delta': delta, 'eps': eps, 'S': S, 'S_inv': S_inv}
    shapes_ok = True
    for key, (src, dst) in want.items():
        ok = got[key].src == src and got[key].dst == dst
        report.expect("shape", key, ok, f"{got[key].src} -> {got[key].dst}")
        shapes_ok = shapes_ok and ok
    if not shapes_ok:
        return report
    ida = identity(cat, A)
    unit_1 = identity(cat, UNIT)
    report.compare("associativity", "A", m @ tensor(m, ida), m @ tensor(ida, m))
    report.compare("unit_left", "A", m @ tensor(u, ida), ida)
    report.compare("unit_right", "A", m @ tensor(ida, u), ida)
    report.compare("coassociativity", "A", tensor(delta, ida) @ delta, tensor(ida, delta) @ delta)
    report.compare("counit_left", "A", tensor(eps, ida) @ delta, ida)
    report.compare("counit_right", "A", tensor(ida, eps) @ delta, ida)
    middle = tensor_all(cat, ida, tau_AA, ida)
    report.compare("bialgebra", "A", delta @ m,
                   compose_all(tensor(m, m), middle, tensor(delta, delta)))
    report.compare("unit_comultiplicative", "A", delta @ u, tensor(u, u))
    report.compare("counit_multiplicative", "A", eps @ m, tensor(eps, eps))
    report.compare("counit_unit", "A", eps @ u, unit_1)
    report.compare("antipode_left", "A", compose_all(m, tensor(S, ida), delta), u @ eps)
    report.compare("antipode_right", "A", compose_all(m, tensor(ida, S), delta), u @ eps)
    report.compare("antipode_invertible", "A", S @ S_inv, ida)
    report.compare("antipode_invertible", "A^-1", S_inv @ S, ida)
    report.compare("antipode_antimultiplicative", "A", S @ m,
                   compose_all(m, tau_AA, tensor(S, S)))
    report.note("check_hopf_algebra")
    return report


def check_hopf_algebra(H: HopfAlgebra) -> Report:
    """All Hopf algebra axioms of ``H`` against its own braiding."""
    report = Report(f"check-hopf-algebra:{H.name}")
    return check_hopf_axioms(H.cat, H.A, H.m, H.u, H.delta, H.eps, H.S, H.S_inv,
                             H.tau(H.A, H.A), report)


def check_hopf_pairing(cat: CategorySpec, C: Obj, m: Mor, u: Mor, delta: Mor, eps: Mor,
                       S: Mor, omega: Mor, tau_CC: Mor, report: Report) -> Report:
    """The Hopf pairing axioms of ``ω: C ⊗ C → 1`` and its self-duality."""
    idc = identity(cat, C)
    CC = tensor_obj(cat, C, C)
    middle = tensor_all(cat, C, omega, C)
    report.compare("pairing_product_left", "C", omega @ tensor(m, C, cat),
                   compose_all(omega, middle, tensor(CC, delta, cat)))
    report.compare("pairing_unit_left", "C", omega @ tensor(u, C, cat), eps)
    report.compare("pairing_product_right", "C", omega @ tensor(C, m, cat),
                   compose_all(omega, middle, tensor(delta, CC, cat)))
    report.compare("pairing_unit_right", "C", omega @ tensor(C, u, cat), eps)
    report.compare("pairing_antipode", "C", omega @ tensor(S, idc), omega @ tensor(idc, S))
    report.compare("pairing_self_dual", "C", compose_all(omega, tau_CC, tensor(S, S)), omega)
    report.note("check_hopf_pairing")
    return report


def op_cop(H: HopfAlgebra, which: str) -> HopfAlgebra:
    """
    Opposite and coopposite algebras.

    ``op`` and ``cop`` live in the mirror category; ``cop_op`` stays put.
    """
    A = H.A
    if which == "op":
        return replace(H, m=H.m @ H.tau(A, A, inverse=True), S=H.S_inv, S_inv=H.S,
                       name=f"{H.name}^op", mirror=not H.mirror)
    if which == "cop":
        return replace(H, delta=H.tau(A, A, inverse=True) @ H.delta, S=H.S_inv, S_inv=H.S,
                       name=f"{H.name}^cop", mirror=not H.mirror)
    if which == "cop_op":
        return replace(H, m=H.m @ H.tau(A, A), delta=H.tau(A, A, inverse=True) @ H.delta,
                       name=f"{H.name}^cop,op")
    raise CategoryError(f"Unknown variant: {which}")


def classical_dual_cop(H: HopfAlgebra) -> HopfAlgebra:
    """
    The Hopf algebra ``(H*)^cop`` of a Hopf algebra over Vec.

    Position ``j`` of the carrier ``∨H`` holds the dual basis vector
    ``e^{n-1-j}``. Product ``(fg)(h) = f(h1) g(h2)``, coproduct
    ``Δ(f)(x ⊗ y) = f(yx)``, antipode ``f ∘ S⁻¹``.
    """
    cat = H.cat
    if cat.kind != "vec":
        raise CategoryError("classical_dual_cop is defined over Vec only")
    n = H.dim
    idx = [n - 1 - a for a in range(n)]
    Astar = dual_obj(cat, H.A)
    AA = tensor_obj(cat, Astar, Astar)
    m_entries, d_entries = {}, {}
    for (r, c), v in H.delta.entries.items():
        a, b = divmod(r, n)
        m_entries[(idx[c], idx[a] * n + idx[b])] = v
    for (r, c), v in H.m.entries.items():
        y, x = divmod(c, n)
        d_entries[(idx[x] * n + idx[y], idx[r])] = v
    m = Mor(cat, AA, Astar, m_entries)
    delta = Mor(cat, Astar, AA, d_entries)
    u = Mor(cat, UNIT, Astar, {(idx[c], 0): v for (_, c), v in H.eps.entries.items()})
    eps = Mor(cat, Astar, UNIT, {(0, idx[r]): v for (r, _), v in H.u.entries.items()})
    S = Mor(cat, Astar, Astar, {(idx[c], idx[r]): v for (r, c), v in H.S_inv.entries.items()})
    S_inv = Mor(cat, Astar, Astar, {(idx[c], idx[r]): v for (r, c), v in H.S.entries.items()})
    return HopfAlgebra(cat, Astar, m, u, delta, eps, S, S_inv, name=f"({H.name}*)^cop")


# modules

@dataclass
class ModuleObj:
    """A left or right module over a Hopf algebra."""

    M: Obj
    action: Mor
    side: str = "left"


def check_module(H: HopfAlgebra, mod: ModuleObj) -> Report:
    report = Report(f"check-module:{H.name}")
    cat, A, M = H.cat, H.A, mod.M
    r = mod.action
    idm, ida = identity(cat, M), identity(cat, A)
    if mod.side == "left":
        if r.src != tensor_obj(cat, A, M) or r.dst != M:
            report.expect("shape", "action", False, f"{r.src} -> {r.dst}")
            return report
        report.compare("module_associative", "M", r @ tensor(H.m, idm), r @ tensor(ida, r))
        report.compare("module_unital", "M", r @ tensor(H.u, idm), idm)
    elif mod.side == "right":
        if r.src != tensor_obj(cat, M, A) or r.dst != M:
            report.expect("shape", "action", False, f"{r.src} -> {r.dst}")
            return report
        report.compare("module_associative", "M", r @ tensor(idm, H.m), r @ tensor(r, ida))
        report.compare("module_unital", "M", r @ tensor(idm, H.u), idm)
    else:
        raise ModuleValidationError(f"Unknown module side: {mod.side}")
    return report


def _validated(H: HopfAlgebra, mod: ModuleObj):
    check_module(H, mod).raise_if_failed(f"Not a {mod.side} {H.name}-module")


def module_tensor(H: HopfAlgebra, M: ModuleObj, N: ModuleObj) -> ModuleObj:
    """Tensor product of two modules on the same side via the coproduct."""
    if M.side != N.side:
        raise ModuleValidationError("Modules on different sides")
    _validated(H, M)
    _validated(H, N)
    cat, A = H.cat, H.A
    MN = tensor_obj(cat, M.M, N.M)
    if M.side == "left":
        action = compose_all(
            tensor(M.action, N.action),
            tensor_all(cat, A, H.tau(A, M.M), N.M),
            tensor(H.delta, MN, cat),
        )
    else:
        action = compose_all(
            tensor(M.action, N.action),
            tensor_all(cat, M.M, H.tau(N.M, A), A),
            tensor(MN, H.delta, cat),
        )
    return ModuleObj(MN, action, M.side)


def module_dual(H: HopfAlgebra, mod: ModuleObj, side: str = "left") -> ModuleObj:
    """
    The left or right dual of a module, twisted by the antipode.

    Left duals of left modules use ``S``, right duals use ``S⁻¹``; for right
    modules the roles are swapped.
    """
    _validated(H, mod)
    cat, A, M, r = H.cat, H.A, mod.M, mod.action
    D = dual_obj(cat, M)
    if mod.side == "left" and side == "left":
        action = compose_all(
            tensor(ev(cat, M), D, cat),
            tensor_all(cat, D, r @ tensor(H.S, M, cat), D),
            tensor(H.tau(A, D), coev(cat, M)),
        )
    elif mod.side == "left" and side == "right":
        action = compose_all(
            tensor(D, ev_right(cat, M), cat),
            tensor_all(cat, D, r @ H.tau(M, A, inverse=True), D),
            tensor_all(cat, coev_right(cat, M), H.S_inv, D),
        )
    elif mod.side == "right" and side == "left":
        action = compose_all(
            tensor(ev(cat, M), D, cat),
            tensor_all(cat, D, r @ H.tau(A, M, inverse=True), D),
            tensor_all(cat, D, H.S_inv, coev(cat, M)),
        )
    elif mod.side == "right" and side == "right":
        action = compose_all(
            tensor(D, ev_right(cat, M), cat),
            tensor_all(cat, D, r @ tensor(M, H.S, cat), D),
            tensor(coev_right(cat, M), H.tau(D, A)),
        )
    else:
        raise ModuleValidationError(f"Unknown side combination: {mod.side}/{side}")
    return ModuleObj(D, action, mod.side)


# R-matrices

def check_algebra_rmatrix(H: HopfAlgebra, r: Mor, coend=None) -> Report:
    """
    Check an R-matrix ``r: C ⊗ C → H ⊗ H`` through the monad it induces.

    ``coend`` defaults to the coend of the ambient category.
    """
    from app.braided_double import coend as coend_of, encode_rmatrix
    from app.hopfmonad import check_monad_rmatrix, hopf_monad_from_algebra

    coend = coend if coend is not None else coend_of(H.cat)
    T = hopf_monad_from_algebra(H, "right")
    report = Report(f"check-rmatrix:{H.name}")
    report.extend(check_monad_rmatrix(T, encode_rmatrix(H, r, coend, T)))
    report.note("check_algebra_rmatrix")
    return report


def braiding_from_rmatrix(H: HopfAlgebra, r: Mor, M: ModuleObj, N: ModuleObj, coend=None) -> Mor:
    """The braiding ``M ⊗ N → N ⊗ M`` of two right modules induced by ``r``."""
    from app.braided_double import coend as coend_of, encode_rmatrix
    from app.hopfmonad import TModule, braiding_from_monad_rmatrix, hopf_monad_from_algebra

    if M.side != "right" or N.side != "right":
        raise ModuleValidationError("R-matrix braidings act on right modules")
    coend = coend if coend is not None else coend_of(H.cat)
    T = hopf_monad_from_algebra(H, "right")
    R = encode_rmatrix(H, r, coend, T)
    return braiding_from_monad_rmatrix(T, R, TModule(M.M, M.action), TModule(N.M, N.action))
