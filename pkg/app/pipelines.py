"""
Pipeline classes and factory for the command-line commands.
"""

import json
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Type
import numpy as np
from app.braided_double import (
    BraidedDouble,
    check_coaction_naturality,
    check_coend,
    check_double_of_unit,
    coend,
    coend_hopf_of_monad,
    consistency_double,
    decode_rmatrix,
    double_algebra,
    encode_rmatrix,
)
from app.centralizer import (
    CoendHopf,
    canonical_law,
    centralize,
    check_center_object,
    check_coaction,
    check_E,
    check_nonrepresentability,
    check_z_contravariant,
    check_z_on_monad_morphism,
    coend_hopf,
    coend_of_center,
    double,
)
from app.distributive import (
    check_composite_modules,
    check_distributive_law,
    check_lift,
    check_middle_unit,
    compose_with_law,
    law_transformation,
)
from app.drinfeld_oracle import dense, drinfeld_double_oracle, oracle_axioms
from app.exceptions import FalsificationError, SpecParseError
from app.functors import NatTrans, nat_component
from app.hopfalg import (
    HopfAlgebra,
    ModuleObj,
    braiding_from_rmatrix,
    check_hopf_algebra,
    check_module,
    classical_dual_cop,
    group_algebra,
    module_dual,
    module_tensor,
    op_cop,
)
from app.hopfmonad import (
    HopfMonad,
    _tuples,
    algebra_map_morphism,
    check_hopf_monad,
    check_monad_morphism,
    check_monad_rmatrix,
    check_tmodule,
    free_tmodule,
    hopf_monad_from_algebra,
    identity_monad,
    monad_morphism,
    tmodule_dual,
    tmodule_tensor,
    unit_morphism,
)
from app.monadal_config import config
from app.report import Report, emit_report, merge_reports
from app.scalars import FieldSpec, scalar_arith, scalar_parse
from app.semicat import (
    CategorySpec,
    Obj,
    braid,
    check_category,
    compose,
    decompose,
    duality_data,
    identity,
    mor_to_dump,
    random_object,
    tensor,
    tensor_obj,
    zero_mor,
)
from app.spec_loader import IDENTITY, SpecLoader, load_spec

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"
ORACLE_AXIOM_LIMIT = 3


@dataclass
class PipelineRequest:
    """One command with its inputs and options."""

    command: str
    category: Optional[Path] = None
    hopf: Optional[Path] = None
    monad: Optional[str] = None
    seed: int = field(default_factory=lambda: config.seed)
    samples: int = field(default_factory=lambda: config.samples)
    max_tuples: int = field(default_factory=lambda: config.max_tuples)
    out: Optional[Path] = None
    fmt: str = "text"
    fixtures: Path = FIXTURES_DIR

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


@dataclass
class PipelineResult:
    """The report of a pipeline and the structure-constant dumps it produced."""

    report: Report
    dumps: Dict[str, dict] = field(default_factory=dict)


# dumps

def obj_dump(X: Obj) -> List[int]:
    return [int(x) for x in X]


def hopf_dump(H: HopfAlgebra) -> dict:
    return {
        "name": H.name,
        "A": obj_dump(H.A),
        **{key: mor_to_dump(getattr(H, key)) for key in ("m", "u", "delta", "eps", "S", "S_inv")},
    }


def coend_hopf_dump(data: CoendHopf) -> dict:
    return {
        "monad": data.T.name,
        "C": obj_dump(data.C),
        "dim": len(data.C),
        "alpha": mor_to_dump(data.module.action),
        **{key: mor_to_dump(getattr(data, key))
           for key in ("m", "u", "delta", "eps", "S", "S_inv", "omega")},
    }


def monad_dump(T: HopfMonad) -> dict:
    return {"name": T.name,
            "objects": {str(i): obj_dump(T.obj((i,))) for i in T.cat.simples}}


def transformation_dump(nu: NatTrans, cat: CategorySpec, arity: int,
                        max_tuples: int) -> Dict[str, dict]:
    return {",".join(str(i) for i in key): mor_to_dump(nu.at(*key))
            for key in _tuples(cat, arity, max_tuples)}


# loading

def _category(request: PipelineRequest, validate: bool = True) -> CategorySpec:
    if request.category is None:
        raise SpecParseError(f"{request.command} needs --category")
    return load_spec(request.category, seed=request.seed, samples=request.samples,
                     validate=validate)


def _optional_category(request: PipelineRequest) -> Optional[CategorySpec]:
    return _category(request) if request.category is not None else None


def _hopf(request: PipelineRequest, cat: Optional[CategorySpec],
          validate: bool = True) -> HopfAlgebra:
    if request.hopf is None:
        raise SpecParseError(f"{request.command} needs --hopf")
    return load_spec(request.hopf, cat=cat, seed=request.seed, samples=request.samples,
                     validate=validate)


def _monad(request: PipelineRequest, cat: CategorySpec, validate: bool = True) -> HopfMonad:
    return load_spec(request.monad or IDENTITY, cat=cat, seed=request.seed,
                     samples=request.samples, validate=validate)


def _is_identity(request: PipelineRequest) -> bool:
    return request.monad in (None, IDENTITY)


class Pipeline(ABC):
    """Abstract base class for command pipelines."""

    command: str = ""

    @abstractmethod
    def run(self, request: PipelineRequest) -> PipelineResult:
        """Execute the pipeline for one request."""
        pass


class CheckCategoryPipeline(Pipeline):
    """Structure tables, zig-zags and braiding identities of a category."""

    command = "check-category"

    def run(self, request: PipelineRequest) -> PipelineResult:
        cat = _category(request, validate=False)
        return PipelineResult(check_category(cat, request.rng(), request.samples))


class CheckHopfAlgebraPipeline(Pipeline):
    """Hopf algebra axioms of an algebra spec."""

    command = "check-hopf-algebra"

    def run(self, request: PipelineRequest) -> PipelineResult:
        H = _hopf(request, _optional_category(request), validate=False)
        return PipelineResult(check_hopf_algebra(H), {"hopf": hopf_dump(H)})


class CheckHopfMonadPipeline(Pipeline):
    """Hopf monad axioms of the identity monad or of ``? ⊗ A``."""

    command = "check-hopf-monad"

    def run(self, request: PipelineRequest) -> PipelineResult:
        cat = _category(request)
        T = _monad(request, cat, validate=False)
        report = check_hopf_monad(T, request.rng(), request.samples, request.max_tuples)
        return PipelineResult(report, {"monad": monad_dump(T)})


class CentralizePipeline(Pipeline):
    """The centralizer ``Z_T``, its coaction and, for the identity, representability."""

    command = "centralize"

    def run(self, request: PipelineRequest) -> PipelineResult:
        cat = _category(request)
        T = _monad(request, cat)
        cent = centralize(T)
        report = Report(f"centralize:{T.name}")
        check_coaction(cent, request.max_tuples, report)
        if _is_identity(request):
            for x in cat.simples:
                report.extend(check_nonrepresentability(cat, x))
        report.note("centralize")
        dumps = {"centralizer": {
            "monad": T.name,
            "Z(1)": obj_dump(cent.Z.obj((0,))),
            "objects": monad_dump(cent.Z)["objects"],
            "coaction": {f"{i},{j}": mor_to_dump(cent.partial_at((i,), (j,)))
                         for (i, j) in _tuples(cat, 2, request.max_tuples)},
        }}
        return PipelineResult(report, dumps)


class DoublePipeline(Pipeline):
    """
    The canonical law, the double ``D_T`` with its R-matrix, and the
    centre correspondence on seeded free modules.
    """

    command = "double"

    def run(self, request: PipelineRequest) -> PipelineResult:
        cat = _category(request)
        T = _monad(request, cat)
        cent = centralize(T)
        Omega, certificate = canonical_law(cent, request.max_tuples)
        report = Report(f"double:{T.name}")
        report.extend(certificate)
        D, R = double(cent, Omega)
        check_hopf_monad(D, request.rng(), request.samples, request.max_tuples, report)
        check_monad_rmatrix(D, R, request.max_tuples, report)
        check_middle_unit(cent.Z, T, D, request.max_tuples, report)
        rng = request.rng()
        for _ in range(request.samples):
            X = random_object(cat, rng, 1)
            Y = random_object(cat, rng, 1)
            check_E(cent, free_tmodule(cent.Z, X), free_tmodule(cent.Z, Y), report)
            check_center_object(cent, D, free_tmodule(D, X), report)
            check_lift(cent.Z, T, Omega, free_tmodule(T, X), report)
            check_composite_modules(cent.Z, T, D, X, report)
        report.note("double")
        dumps = {"double": {
            "monad": monad_dump(D),
            "Omega": transformation_dump(Omega, cat, 1, request.max_tuples),
            "R": transformation_dump(R, cat, 2, request.max_tuples),
        }}
        return PipelineResult(report, dumps)


class CoendPipeline(Pipeline):
    """
    The coend of the centre of T-modules; over a braided category also the
    coend of the category itself with its pairing.
    """

    command = "coend"

    def run(self, request: PipelineRequest) -> PipelineResult:
        cat = _category(request)
        dumps = {}
        if _is_identity(request):
            data, report = coend_of_center(cat, request.max_tuples)
        else:
            T = _monad(request, cat)
            cent = centralize(T)
            Omega, certificate = canonical_law(cent, request.max_tuples)
            D, R = double(cent, Omega)
            report = Report(f"coend:{D.name}")
            report.extend(certificate)
            data, _ = coend_hopf(D, R, request.max_tuples, report)
        dumps["coend_of_center"] = coend_hopf_dump(data)
        if cat.is_braided:
            braided = coend(cat)
            check_coend(braided, report, request.max_tuples)
            check_coaction_naturality(braided, request.rng(), request.samples, report)
            dumps["coend"] = {**hopf_dump(braided.hopf), "omega": mor_to_dump(braided.omega)}
        return PipelineResult(report, dumps)


def compare_with_oracle(bd: BraidedDouble, cayley, report: Report) -> Report:
    """Structure constants of ``D(kG)`` against the textbook double, entry by entry."""
    oracle = drinfeld_double_oracle(cayley)
    ours = {"m": bd.DA.m, "u": bd.DA.u, "delta": bd.DA.delta, "eps": bd.DA.eps,
            "S": bd.DA.S, "r": bd.r}
    for key, expected in oracle.arrays().items():
        ok = dense(ours[key]).shape == expected.shape and np.array_equal(dense(ours[key]), expected)
        report.expect("oracle_" + key, bd.DA.name, ok, f"{key} differs from the textbook double")
    if oracle.n <= ORACLE_AXIOM_LIMIT:
        for key, ok in oracle_axioms(oracle).items():
            report.expect("oracle_axiom", key, ok, "textbook double fails this identity")
    report.expect("double_dimension", bd.DA.name, bd.DA.dim == oracle.dim,
                  f"dim {bd.DA.dim} != {oracle.dim}")
    report.note("drinfeld_oracle")
    return report


def check_rmatrix_round_trip(bd: BraidedDouble, report: Report) -> Report:
    """Encoding ``r`` as an R-matrix of ``? ⊗ D(A)`` and decoding it gives ``r`` back."""
    M = hopf_monad_from_algebra(bd.DA, "right")
    R = encode_rmatrix(bd.DA, bd.r, bd.coend, M)
    report.compare("rmatrix_round_trip", bd.DA.name, decode_rmatrix(bd.DA, R, bd.coend), bd.r)
    report.note("decode_rmatrix")
    return report


class DoubleAlgebraPipeline(Pipeline):
    """``D(A)`` with its R-matrix, the oracle for group algebras and the monad double."""

    command = "double-algebra"

    def run(self, request: PipelineRequest) -> PipelineResult:
        H = _hopf(request, _optional_category(request))
        bd, report = double_algebra(H, max_tuples=request.max_tuples)
        check_rmatrix_round_trip(bd, report)
        data = SpecLoader.read_document(request.hopf)
        if data.get("kind") == "group_algebra" and H.cat.kind == "vec":
            compare_with_oracle(bd, data["cayley"], report)
        try:
            report.extend(consistency_double(bd, request.max_tuples))
        except FalsificationError as e:
            report.extend(e.report)
        dumps = {"double_algebra": {
            "A": hopf_dump(H),
            "Z(A)": hopf_dump(bd.ZA),
            "Omega": mor_to_dump(bd.Omega),
            "D(A)": hopf_dump(bd.DA),
            "r": mor_to_dump(bd.r),
        }}
        return PipelineResult(report, dumps)


# verify-all

Step = Tuple[str, Callable[[], PipelineResult]]


def _monad_morphism_suite(cat: CategorySpec, cayley, max_tuples: int) -> PipelineResult:
    """``Z`` on the unit ``Id → ? ⊗ kG`` and on an identity map, with contravariance."""
    H = group_algebra(cat, cayley)
    T = hopf_monad_from_algebra(H, "right")
    base = identity_monad(cat)
    f = unit_morphism(T)
    g = algebra_map_morphism(T, T, identity(cat, H.A), "id")
    gf = monad_morphism(base, T, lambda i: g.at(i) @ f.at(i), "id∘eta")
    report = Report(f"monad-morphisms:{H.name}")
    report.extend(check_monad_morphism(f, base, T, max_tuples))
    first, last = centralize(base), centralize(T)
    check_z_on_monad_morphism(first, last, f, max_tuples, report)
    report.extend(check_z_contravariant(first, last, last, f, g, gf, max_tuples))
    CT, inner = coend_hopf_of_monad(T, max_tuples)
    report.extend(inner)
    return PipelineResult(report, {"coend_hopf_of_monad": hopf_dump(CT)})


def _consistency_suite(cat: CategorySpec, cayley, max_tuples: int) -> PipelineResult:
    """The double of ``kG`` against the monad double, and ``D(𝟙) = C``, over a braided category."""
    bd, report = double_algebra(group_algebra(cat, cayley), max_tuples=max_tuples)
    try:
        report.extend(consistency_double(bd, max_tuples))
    except FalsificationError as e:
        report.extend(e.report)
    check_double_of_unit(cat, max_tuples, report)
    return PipelineResult(report, {"double_algebra": {"D(A)": hopf_dump(bd.DA),
                                                      "r": mor_to_dump(bd.r)}})


def _primitives_suite(fixtures: Path, seed: int, samples: int, max_tuples: int) -> PipelineResult:
    """The building blocks under the pipelines, each against an identity it must satisfy."""
    report = Report("primitives")
    rng = np.random.default_rng(seed)

    def load(name: str, cat: Optional[CategorySpec] = None):
        report.note("load_spec")
        return load_spec(fixtures / name, cat=cat, seed=seed, samples=samples)

    vec, sign = load("vec.json"), load("vec_z2_sign.json")
    H, K = load("sweedler.json", vec), load("kz2.json", vec)

    # scalars
    Q, F5 = FieldSpec.rationals(), FieldSpec.prime(5)
    a, b = scalar_parse("-3/4", Q), scalar_parse("2/3", Q)
    three = scalar_parse("3", F5)
    report.expect("scalar_div_mul", "Q", scalar_arith(scalar_arith(a, b, "div"), b, "mul") == a,
                  "(a / b) * b != a")
    report.expect("scalar_add_sub", "Q", scalar_arith(scalar_arith(a, b, "add"), b, "sub") == a,
                  "(a + b) - b != a")
    report.expect("scalar_mul_mod", "Fp:5",
                  scalar_arith(three, three, "mul") == scalar_parse("4", F5), "3 * 3 != 4 mod 5")
    for op in ("scalar_parse", "scalar_arith"):
        report.note(op)

    # the braided category Vec_{Z2} with the sign bicharacter
    X, Y, W = (0, 1), (1,), (1, 0, 1)
    f, g, h = braid(sign, X, Y), braid(sign, Y, X), braid(sign, Y, Y)
    report.compare("braid_invertible", (X, Y), compose(g, braid(sign, X, Y, inverse=True)),
                   identity(sign, tensor_obj(sign, X, Y)))
    report.compare("tensor_interchange", (X, Y), tensor(compose(g, f), compose(h, h)),
                   compose(tensor(g, h), tensor(f, h)))
    for side in ("left", "right"):
        _, e, c = duality_data(sign, X, side)
        if side == "left":
            zig = compose(tensor(X, e, sign), tensor(c, X, sign))
        else:
            zig = compose(tensor(e, X, sign), tensor(X, c, sign))
        report.compare(f"duality_zigzag_{side}", X, zig, identity(sign, X))
        report.note("duality_data")
    d = decompose(sign, W)
    total = zero_mor(sign, W, W)
    for k in d.keys():
        report.compare("decompose_retract", k, d.p[k] @ d.q[k], identity(sign, (k[0],)))
        total = total + d.q[k] @ d.p[k]
    report.compare("decompose_complete", W, total, identity(sign, W))
    for op in ("braid", "compose", "tensor", "decompose"):
        report.note(op)

    # Hopf algebras and their modules
    for which in ("op", "cop", "cop_op"):
        report.extend(check_hopf_algebra(op_cop(H, which)))
        report.note("op_cop")
    report.extend(check_hopf_algebra(classical_dual_cop(H)))
    report.note("classical_dual_cop")
    left, right = ModuleObj(H.A, H.m, "left"), ModuleObj(H.A, H.m, "right")
    modules = [left, right, module_tensor(H, left, left), module_dual(H, left, "left"),
               module_dual(H, left, "right"), module_dual(H, right, "left")]
    for mod in modules:
        report.extend(check_module(H, mod))
        report.note("check_module")
    report.note("module_tensor")
    for _ in range(3):
        report.note("module_dual")
    regular = ModuleObj(K.A, K.m, "right")
    report.compare("trivial_rmatrix_braiding", "A",
                   braiding_from_rmatrix(K, tensor(K.u, K.u), regular, regular),
                   braid(vec, K.A, K.A))
    report.note("braiding_from_rmatrix")

    # monads of algebras, their modules and a composite
    P, T = hopf_monad_from_algebra(H, "right"), hopf_monad_from_algebra(K, "right")
    report.note("hopf_monad_from_algebra")
    check_hopf_monad(T, rng, samples, max_tuples, report)
    U, V = (0,), (0, 0)
    f, g = braid(vec, U, V), braid(vec, V, U)
    report.compare("functor_composition", (U, V), T.T(compose(g, f)), compose(T.T(g), T.T(f)))
    report.compare("functor_identity", V, T.T(identity(vec, V)), identity(vec, T.T(V)))
    report.note("apply_functor")
    UV = tensor_obj(vec, U, V)
    report.compare("eta_natural", (U, V), T.mor(f) @ nat_component(T.eta, UV),
                   nat_component(T.eta, tensor_obj(vec, V, U)) @ f)
    report.note("nat_component")
    free = free_tmodule(T, U)
    report.note("free_tmodule")
    for mod in (free, tmodule_tensor(T, free, free), tmodule_dual(T, free, "left"),
                tmodule_dual(T, free, "right")):
        check_tmodule(T, mod, report)
        report.note("check_tmodule")
    for op in ("tmodule_tensor", "tmodule_dual"):
        report.note(op)
    Omega = law_transformation(P, T, lambda i: tensor((i,), braid(vec, H.A, K.A), vec), "flip")
    check_distributive_law(Omega, P, T, max_tuples, report)
    PT = compose_with_law(P, T, Omega)
    report.note("compose_with_law")
    check_hopf_monad(PT, rng, 1, max_tuples, report)
    check_middle_unit(P, T, PT, max_tuples, report)

    # rendering
    rendered = emit_report(report, "json").decode(config.default_encoding)
    restored = Report.from_dict(json.loads(rendered))
    report.expect("emit_report_round_trip", "json",
                  restored.failed_checks() == report.failed_checks()
                  and len(list(restored)) == len(list(report)),
                  "the JSON rendering does not restore the records")
    report.note("emit_report")
    return PipelineResult(report, {"compose_with_law": monad_dump(PT)})


class VerifyAllPipeline(Pipeline):
    """
    Every pipeline over the shipped fixtures, with an operation-coverage
    check on the merged report.
    """

    command = "verify-all"

    REQUIRED_OPERATIONS = (
        "scalar_arith", "scalar_parse", "tensor", "compose", "duality_data", "braid", "decompose",
        "check_category", "check_hopf_algebra", "op_cop", "classical_dual_cop", "check_module",
        "module_tensor", "module_dual", "check_algebra_rmatrix", "braiding_from_rmatrix",
        "apply_functor", "nat_component", "hopf_monad_from_algebra", "check_hopf_monad",
        "check_monad_rmatrix", "check_tmodule", "tmodule_tensor", "tmodule_dual", "free_tmodule",
        "check_monad_morphism", "check_distributive_law", "compose_with_law", "lift_module",
        "invert_law", "check_middle_unit", "composite_modules", "centralize", "check_coaction",
        "check_nonrepresentability", "canonical_law", "double", "half_braiding_E",
        "center_object_I", "coend_of_module_category", "coend_hopf", "coend_of_center",
        "check_hopf_pairing", "z_on_monad_morphism", "check_z_contravariant", "coend",
        "check_representation", "coend_hopf_of_monad", "centralizer_algebra", "check_algebra_law",
        "canonical_law_algebra", "double_algebra", "check_yang_baxter", "decode_rmatrix",
        "consistency_double", "double_of_unit", "drinfeld_oracle", "load_spec", "run_pipeline",
        "emit_report",
    )

    def _sub(self, request: PipelineRequest, command: str, **inputs) -> PipelineRequest:
        paths = {key: (request.fixtures / value if key != "monad" or value != IDENTITY else value)
                 for key, value in inputs.items()}
        return PipelineRequest(command, seed=request.seed, samples=request.samples,
                               max_tuples=request.max_tuples, fixtures=request.fixtures, **paths)

    def steps(self, request: PipelineRequest) -> List[Step]:
        sub = lambda command, **inputs: self._sub(request, command, **inputs)
        plan: List[Tuple[str, PipelineRequest]] = []
        for name in ("vec", "vec_z2", "vec_z2_sign", "vec_z3", "vec_s3", "vec_klein"):
            plan.append((f"check-category:{name}", sub("check-category", category=f"{name}.json")))
        for name in ("kz2", "kz3", "ks3", "sweedler"):
            plan.append((f"check-hopf-algebra:{name}",
                         sub("check-hopf-algebra", hopf=f"{name}.json")))
        plan.append(("check-hopf-monad:vec_s3",
                     sub("check-hopf-monad", category="vec_s3.json", monad=IDENTITY)))
        plan.append(("check-hopf-monad:kz2",
                     sub("check-hopf-monad", category="vec.json", monad="monad_kz2.json")))
        for name in ("vec_z2", "vec_s3"):
            plan.append((f"centralize:{name}", sub("centralize", category=f"{name}.json")))
        for name in ("vec_z2", "vec_z3"):
            plan.append((f"double:{name}", sub("double", category=f"{name}.json")))
        plan.append(("double:kz2", sub("double", category="vec.json", monad="monad_kz2.json")))
        for name in ("vec_z2", "vec_z3", "vec_z2_sign", "vec_klein"):
            plan.append((f"coend:{name}", sub("coend", category=f"{name}.json")))
        for name in ("kz2", "kz3", "ks3", "sweedler"):
            plan.append((f"double-algebra:{name}",
                         sub("double-algebra", category="vec.json", hopf=f"{name}.json")))
        steps: List[Step] = [(label, (lambda r=r: PipelineFactory.create_pipeline(r.command).run(r)))
                             for label, r in plan]

        def fixture_category(name: str) -> CategorySpec:
            return load_spec(request.fixtures / name, seed=request.seed, samples=request.samples)

        z2 = [[0, 1], [1, 0]]
        steps.append(("monad-morphisms:vec",
                      lambda: _monad_morphism_suite(fixture_category("vec.json"), z2,
                                                    request.max_tuples)))
        steps.append(("consistency:vec_z2_sign",
                      lambda: _consistency_suite(fixture_category("vec_z2_sign.json"), z2,
                                                 request.max_tuples)))
        steps.append(("primitives:vec_z2_sign",
                      lambda: _primitives_suite(request.fixtures, request.seed, request.samples,
                                                request.max_tuples)))
        return steps

    def run(self, request: PipelineRequest) -> PipelineResult:
        steps = self.steps(request)

        def run_step(step: Step) -> PipelineResult:
            label, action = step
            try:
                result = action()
            except FalsificationError as e:
                result = PipelineResult(e.report if e.report is not None else Report(label))
            result.report.note("run_pipeline")
            return result

        with ThreadPoolExecutor(max_workers=config.threads) as executor:
            results = list(executor.map(run_step, steps))
        report = merge_reports("verify-all", (r.report for r in results))
        dumps = {}
        for (label, _), result in zip(steps, results):
            for key, value in result.dumps.items():
                dumps[f"{label}/{key}"] = value
        missing = [op for op in self.REQUIRED_OPERATIONS if report.operations[op] == 0]
        report.expect("operation_coverage", f"{len(self.REQUIRED_OPERATIONS)} operations",
                      not missing, "not exercised: " + ", ".join(missing))
        return PipelineResult(report, dumps)


class PipelineFactory:
    """Factory class for creating pipeline instances."""

    _pipelines: Dict[str, Type[Pipeline]] = {
        'check-category': CheckCategoryPipeline,
        'check-hopf-algebra': CheckHopfAlgebraPipeline,
        'check-hopf-monad': CheckHopfMonadPipeline,
        'centralize': CentralizePipeline,
        'double': DoublePipeline,
        'coend': CoendPipeline,
        'double-algebra': DoubleAlgebraPipeline,
        'verify-all': VerifyAllPipeline,
    }

    @classmethod
    def create_pipeline(cls, command: str) -> Pipeline:
        """Create a pipeline instance by command name."""
        pipeline_class = cls._pipelines.get(command.lower())
        if not pipeline_class:
            raise SpecParseError(f"Unknown command: {command}")
        return pipeline_class()

    @classmethod
    def get_available_commands(cls) -> list:
        """Get list of available command names."""
        return list(cls._pipelines.keys())
