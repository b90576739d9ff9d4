"""
Tests for loading and validating JSON specs
"""
import json
import pytest
from app.exceptions import FalsificationError, SpecParseError
from app.hopfalg import HopfAlgebra, group_algebra
from app.hopfmonad import HopfMonad
from app.semicat import CategorySpec, mor_to_dump
from app.spec_loader import IDENTITY, SpecLoader, load_spec


def write_spec(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


class TestLoadFixtures:
    """Tests for the shipped fixtures"""

    @pytest.mark.parametrize("name,n", [("vec", 1), ("vec_z2", 2), ("vec_z3", 3),
                                        ("vec_s3", 6), ("vec_klein", 4)])
    def test_categories(self, fixtures_dir, name, n):
        """Test every category fixture loads and validates"""
        cat = load_spec(fixtures_dir / f"{name}.json", samples=1)
        assert isinstance(cat, CategorySpec)
        assert cat.n_simples == n

    def test_braided_category(self, fixtures_dir):
        """Test the bicharacter of the sign instance"""
        cat = load_spec(fixtures_dir / "vec_z2_sign.json", samples=1)
        assert cat.is_braided and cat.name == "vec_z2_sign"
        assert cat.chi(1, 1) == cat.field.neg(cat.field.one)

    @pytest.mark.parametrize("name,dim", [("kz2", 2), ("kz3", 3), ("sweedler", 4)])
    def test_hopf_algebras(self, fixtures_dir, name, dim):
        """Test Hopf algebra fixtures resolve their category"""
        H = load_spec(fixtures_dir / f"{name}.json", samples=1)
        assert isinstance(H, HopfAlgebra)
        assert H.dim == dim

    def test_monad(self, fixtures_dir):
        """Test the monad fixture ? ⊗ kZ2"""
        T = load_spec(fixtures_dir / "monad_kz2.json", samples=1)
        assert isinstance(T, HopfMonad)
        assert T.obj((0,)) == (0, 0)

    def test_identity_literal(self, vec_z2):
        """Test the identity literal selects the identity monad"""
        T = load_spec(IDENTITY, cat=vec_z2)
        assert T.obj((1,)) == (1,)

    def test_identity_without_category(self):
        """Test the identity literal needs a category"""
        with pytest.raises(SpecParseError):
            load_spec(IDENTITY)


class TestMalformedSpecs:
    """Tests for parse errors"""

    def test_missing_file(self, tmp_path):
        """Test a missing file raises"""
        with pytest.raises(SpecParseError, match="not found"):
            load_spec(tmp_path / "nope.json")

    def test_corrupted_json_names_line(self, tmp_path):
        """Test a syntax error reports its line"""
        path = tmp_path / "broken.json"
        path.write_text('{\n  "type": "category",\n  "kind" "vec"\n}', encoding="utf-8")
        with pytest.raises(SpecParseError, match=r"broken\.json:3:"):
            load_spec(path)

    def test_top_level_not_object(self, tmp_path):
        """Test a JSON list is rejected"""
        with pytest.raises(SpecParseError, match="top level"):
            load_spec(write_spec(tmp_path / "list.json", [1, 2]))

    @pytest.mark.parametrize("data,fragment", [
        ({}, "missing field 'type'"),
        ({"type": "functor"}, "unknown spec type"),
        ({"type": "category", "kind": "fusion"}, "unknown category kind"),
        ({"type": "category"}, "missing field 'cayley'"),
        ({"type": "category", "cayley": [[0, 1]]}, "not square"),
        ({"type": "category", "cayley": [[0, "x"], [1, 0]]}, "cayley"),
        ({"type": "category", "cayley": [[0]], "bicharacter": [["1", "1"]]}, "bicharacter"),
        ({"type": "category", "cayley": [[0]], "bicharacter": [["a"]]}, "bicharacter"),
        ({"type": "category", "kind": "vec", "field": "R"}, "field spec"),
        ({"type": "hopf_algebra"}, "no category"),
    ])
    def test_malformed(self, tmp_path, data, fragment):
        """Test malformed documents name the offending field"""
        with pytest.raises(SpecParseError, match=fragment):
            load_spec(write_spec(tmp_path / "spec.json", data))

    def test_unknown_hopf_kind(self, tmp_path, vec):
        """Test an unknown Hopf algebra kind raises"""
        path = write_spec(tmp_path / "h.json", {"type": "hopf_algebra", "kind": "quantum"})
        with pytest.raises(SpecParseError, match="unknown Hopf algebra kind"):
            load_spec(path, cat=vec)

    def test_unknown_monad_kind(self, tmp_path, vec):
        """Test an unknown monad kind raises"""
        path = write_spec(tmp_path / "t.json", {"type": "hopf_monad", "kind": "free"})
        with pytest.raises(SpecParseError, match="unknown monad kind"):
            load_spec(path, cat=vec)


class TestValidation:
    """Tests for axiom checks on load"""

    BAD_BRAIDING = {"type": "category", "name": "bad", "cayley": [[0, 1], [1, 0]],
                    "bicharacter": [["1", "1"], ["1", "2"]]}

    def test_failing_category_raises(self, tmp_path):
        """Test a non-bicharacter braiding fails validation"""
        path = write_spec(tmp_path / "bad.json", self.BAD_BRAIDING)
        with pytest.raises(FalsificationError) as info:
            load_spec(path, samples=1)
        assert "hexagon" in info.value.report.failed_checks()

    def test_corrupted_table_is_falsified(self, tmp_path):
        """Test a corrupted Cayley table fails validation with a report"""
        data = {"type": "category", "name": "bad", "cayley": [[0, 1, 2], [1, 2, 1], [2, 0, 1]]}
        with pytest.raises(FalsificationError) as info:
            load_spec(write_spec(tmp_path / "bad.json", data), samples=1)
        assert "tensor_assoc" in info.value.report.failed_checks()

    def test_validation_can_be_skipped(self, tmp_path):
        """Test validate=False returns the object unchecked"""
        path = write_spec(tmp_path / "bad.json", self.BAD_BRAIDING)
        assert load_spec(path, validate=False).name == "bad"

    def test_explicit_hopf_algebra(self, tmp_path, vec):
        """Test an explicit Hopf algebra given by its structure dumps"""
        H = group_algebra(vec, [[0, 1], [1, 0]])
        data = {"type": "hopf_algebra", "name": "explicit", "A": list(H.A)}
        data.update({key: mor_to_dump(getattr(H, key)) for key in ("m", "u", "delta", "eps", "S")})
        loaded = load_spec(write_spec(tmp_path / "h.json", data), cat=vec)
        assert loaded.name == "explicit"
        assert loaded.m == H.m and loaded.S_inv == H.S_inv

    def test_require(self):
        """Test require names the missing key and the source"""
        with pytest.raises(SpecParseError, match="src: missing field 'k'"):
            SpecLoader.require({}, "k", "src")
