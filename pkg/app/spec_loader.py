"""
Loading and validation of JSON input specs for categories, Hopf algebras
and Hopf monads.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union
import numpy as np
from app.exceptions import SpecParseError
from app.hopfalg import HopfAlgebra, check_hopf_algebra, group_algebra, sweedler_algebra
from app.hopfmonad import HopfMonad, check_hopf_monad, hopf_monad_from_algebra, identity_monad
from app.linalg import inverse
from app.monadal_config import config
from app.scalars import FieldSpec
from app.semicat import CategorySpec, check_category, mor_from_dump, vec_category, vec_g_category

IDENTITY = "identity"
HOPF_MORPHISMS = ("m", "u", "delta", "eps", "S")

Spec = Union[CategorySpec, HopfAlgebra, HopfMonad]


class SpecLoader:
    """Parses spec documents and validates the objects they describe."""

    @staticmethod
    def read_document(path: Union[str, Path]) -> Dict[str, Any]:
        """
        Read a JSON document.

        Raises:
            SpecParseError: If the file is missing or is not a JSON object;
                the message names the line and column of a syntax error.
        """
        path = Path(path)
        if not path.exists():
            raise SpecParseError(f"Spec file not found: {path}")
        try:
            data = json.loads(path.read_text(encoding=config.default_encoding))
        except json.JSONDecodeError as e:
            raise SpecParseError(f"{path}:{e.lineno}:{e.colno}: {e.msg}")
        if not isinstance(data, dict):
            raise SpecParseError(f"{path}: top level must be an object")
        return data

    @staticmethod
    def require(data: Dict[str, Any], key: str, source: Union[str, Path]) -> Any:
        if key not in data:
            raise SpecParseError(f"{source}: missing field '{key}'")
        return data[key]

    @staticmethod
    def parse_category(data: Dict[str, Any], source: Union[str, Path] = "<spec>") -> CategorySpec:
        field = FieldSpec.parse_spec(str(data.get("field", "Q")))
        kind = data.get("kind", "vec_g")
        if kind == "vec":
            return vec_category(field)
        if kind != "vec_g":
            raise SpecParseError(f"{source}: field 'kind': unknown category kind {kind!r}")
        cayley = SpecLoader.require(data, "cayley", source)
        try:
            table = [[int(x) for x in row] for row in cayley]
        except (TypeError, ValueError) as e:
            raise SpecParseError(f"{source}: field 'cayley': {e}")
        if any(len(row) != len(table) for row in table):
            raise SpecParseError(f"{source}: field 'cayley': table is not square")
        bicharacter = data.get("bicharacter")
        if bicharacter is not None:
            try:
                bicharacter = [[field.parse(x) for x in row] for row in bicharacter]
            except SpecParseError as e:
                raise SpecParseError(f"{source}: field 'bicharacter': {e}")
            if len(bicharacter) != len(table) or any(len(row) != len(table) for row in bicharacter):
                raise SpecParseError(f"{source}: field 'bicharacter': shape differs from cayley")
        return vec_g_category(table, field, bicharacter, name=data.get("name", Path(str(source)).stem))

    @staticmethod
    def parse_hopf(data: Dict[str, Any], cat: CategorySpec,
                   source: Union[str, Path] = "<spec>") -> HopfAlgebra:
        kind = data.get("kind", "explicit")
        name = data.get("name", Path(str(source)).stem)
        if kind == "group_algebra":
            cayley = SpecLoader.require(data, "cayley", source)
            return group_algebra(cat, [[int(x) for x in row] for row in cayley], name=name)
        if kind == "sweedler":
            return sweedler_algebra(cat)
        if kind != "explicit":
            raise SpecParseError(f"{source}: field 'kind': unknown Hopf algebra kind {kind!r}")
        A = tuple(int(x) for x in SpecLoader.require(data, "A", source))
        mors = {}
        for key in HOPF_MORPHISMS:
            try:
                mors[key] = mor_from_dump(cat, SpecLoader.require(data, key, source))
            except SpecParseError as e:
                raise SpecParseError(f"{source}: field '{key}': {e}")
        S_inv = (mor_from_dump(cat, data["S_inv"]) if "S_inv" in data
                 else inverse(mors["S"]))
        return HopfAlgebra(cat, A, mors["m"], mors["u"], mors["delta"], mors["eps"],
                           mors["S"], S_inv, name=name)


def _rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(config.seed if seed is None else seed)


def _category_for(data: Dict[str, Any], path: Path, cat: Optional[CategorySpec],
                  seed: Optional[int], samples: Optional[int]) -> CategorySpec:
    if cat is not None:
        return cat
    ref = data.get("category")
    if ref is None:
        raise SpecParseError(f"{path}: no category given and no 'category' field")
    return load_spec(path.parent / ref, seed=seed, samples=samples)


def load_spec(path: Union[str, Path], cat: Optional[CategorySpec] = None,
              seed: Optional[int] = None, samples: Optional[int] = None,
              validate: bool = True) -> Spec:
    """
    Load a category, Hopf algebra or Hopf monad and run its axiom check.

    Hopf algebras and monads live in ``cat``, or in the category their
    ``category`` field points to (relative to the spec file). The string
    ``identity`` selects the identity monad of ``cat``. With ``validate``
    off the axiom check is left to the caller.

    Raises:
        SpecParseError: If the document is malformed
        FalsificationError: If the loaded object fails its axioms
    """
    samples = config.samples if samples is None else samples
    if str(path) == IDENTITY:
        if cat is None:
            raise SpecParseError("The identity monad needs a category")
        return identity_monad(cat)

    path = Path(path)
    data = SpecLoader.read_document(path)
    spec_type = SpecLoader.require(data, "type", path)
    if spec_type == "category":
        result = SpecLoader.parse_category(data, path)
        if validate:
            check_category(result, _rng(seed), samples).raise_if_failed(
                f"{path} fails the category axioms")
        return result
    if spec_type == "hopf_algebra":
        base = _category_for(data, path, cat, seed, samples)
        result = SpecLoader.parse_hopf(data, base, path)
        if validate:
            check_hopf_algebra(result).raise_if_failed(f"{path} fails the Hopf algebra axioms")
        return result
    if spec_type == "hopf_monad":
        base = _category_for(data, path, cat, seed, samples)
        kind = data.get("kind", IDENTITY)
        if kind == IDENTITY:
            return identity_monad(base)
        if kind != "algebra":
            raise SpecParseError(f"{path}: field 'kind': unknown monad kind {kind!r}")
        H = load_spec(path.parent / SpecLoader.require(data, "hopf", path), cat=base,
                      seed=seed, samples=samples)
        result = hopf_monad_from_algebra(H, data.get("side", "right"))
        if validate:
            check_hopf_monad(result, _rng(seed), samples).raise_if_failed(
                f"{path} fails the Hopf monad axioms")
        return result
    raise SpecParseError(f"{path}: field 'type': unknown spec type {spec_type!r}")
