import pytest

from rbhopf import (GF, QQ, FormatError, Mat, PreLieCoalgebra, Tensor3,
                    adjoint_yd, builtin, coquasitriangular_form,
                    example54_q, regular_hopf_module)
from rbhopf.fileformat import Comodule, Document, dumps, load, loads, save


STRUCTS = ["group:C2", "group:C3", "group:S3", "sweedler4", "example54",
           "dual-group:C2", "grouplike:2", "trivial"]


@pytest.mark.parametrize("name", STRUCTS)
def test_structure_round_trip(name, tmp_path):
    s = builtin(name)
    path = tmp_path / "s.rbh"
    text = save(s, path)
    doc = load(path)
    assert doc.payload == s
    assert dumps(doc) == text


@pytest.mark.parametrize("name", ["group:C2", "example54"])
def test_structure_round_trip_over_f5(name, tmp_path):
    s = builtin(name, GF(5))
    path = tmp_path / "s.rbh"
    save(s, path)
    assert load(path).payload == s


def test_save_load_save_is_byte_identical(tmp_path):
    s = builtin("sweedler4")
    p1 = tmp_path / "a.rbh"
    p2 = tmp_path / "b.rbh"
    save(s, p1)
    save(load(p1), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_operator_round_trip(tmp_path):
    q = example54_q(3)
    path = tmp_path / "q.rbh"
    save(q, path)
    doc = load(path)
    assert doc.kind == "operator" and doc.payload == q


def test_rational_entries_survive_exactly(tmp_path):
    from fractions import Fraction
    m = Mat(QQ, ((Fraction(22, 7), Fraction(-1, 3)), (0, Fraction(10 ** 20))))
    path = tmp_path / "m.rbh"
    text = save(m, path)
    assert "22 7" in text and "-1 3" in text
    assert load(path).payload == m


def test_module_round_trip_with_builtin_ref(tmp_path):
    hm = regular_hopf_module(builtin("sweedler4"))
    path = tmp_path / "m.rbh"
    text = save(hm, path, refs={"hopf": "builtin:sweedler4"})
    doc = load(path)
    assert doc.kind == "module"
    assert doc.payload == hm
    assert doc.refs == {"hopf": "builtin:sweedler4"}
    assert dumps(doc) == text


def test_module_round_trip_with_file_ref(tmp_path):
    h4 = builtin("sweedler4")
    save(h4, tmp_path / "h4.rbh")
    hm = regular_hopf_module(h4)
    save(hm, tmp_path / "m.rbh", refs={"hopf": "h4.rbh"})
    doc = load(tmp_path / "m.rbh")
    assert doc.payload == hm


def test_yd_round_trip(tmp_path):
    ydc = adjoint_yd(builtin("sweedler4"))
    path = tmp_path / "yd.rbh"
    text = save(ydc, path, refs={"hopf": "builtin:sweedler4"})
    doc = load(path)
    assert doc.kind == "yd"
    # names are not serialized for the embedded coalgebra
    assert doc.payload.coalgebra.comul == ydc.coalgebra.comul
    assert doc.payload.action == ydc.action
    assert doc.payload.coaction == ydc.coaction
    assert dumps(doc) == text


def test_sigma_round_trip(tmp_path):
    c2 = builtin("group:C2")
    cq = coquasitriangular_form(c2, {(0, 0): 1, (0, 1): 1,
                                     (1, 0): 1, (1, 1): -1})
    path = tmp_path / "sigma.rbh"
    save(cq, path, refs={"hopf": "builtin:group:C2"})
    doc = load(path)
    assert doc.kind == "sigma" and doc.payload == cq


def test_comodule_round_trip(tmp_path):
    c2 = builtin("group:C2")
    cm = Comodule(c2, 2, c2.comul.comul_matrix(), "right")
    path = tmp_path / "cm.rbh"
    save(cm, path, refs={"hopf": "builtin:group:C2"})
    assert load(path).payload == cm


def test_prelie_round_trip(tmp_path):
    plc = PreLieCoalgebra(2, QQ, Tensor3(QQ, (2, 2, 2), {(0, 0, 1): 1}))
    path = tmp_path / "p.rbh"
    save(plc, path)
    doc = load(path)
    assert doc.kind == "prelie" and doc.payload == plc


def test_fp_entries_are_bare_residues(tmp_path):
    s = builtin("group:C2", GF(2))
    text = dumps(s)
    assert "field Fp:2" in text
    assert "mul 0 0 0 1\n" in text


def test_missing_hopf_ref_is_an_error(tmp_path):
    hm = regular_hopf_module(builtin("group:C2"))
    with pytest.raises(ValueError):
        dumps(hm)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(FormatError) as err:
        loads("rbhopf 1 coalgebra\nfield Q\ndim 2\ncomul 0 0 5 1 1\n")
    assert "line 4" in str(err.value)
    with pytest.raises(FormatError):
        loads("not a header\n")
    with pytest.raises(FormatError):
        loads("rbhopf 9 coalgebra\nfield Q\ndim 1\n")
    with pytest.raises(FormatError):
        loads("rbhopf 1 nonsense\nfield Q\n")
    with pytest.raises(FormatError):
        loads("rbhopf 1 coalgebra\nfield Q\ndim 2\ncomul 0 0 0 1 0\n")
    with pytest.raises(FormatError):
        loads("rbhopf 1 hopf\nfield Q\ndim 2\ncomul 0 0 0 1 1\n")


def test_truncated_lines_rejected():
    for text in ("rbhopf 1 operator\nfield Q\nrows\n",
                 "rbhopf 1 module\nfield Q\nside right\nhopf\n",
                 "rbhopf 1 coalgebra\nfield\n"):
        with pytest.raises(FormatError):
            loads(text)


def test_duplicate_entry_rejected():
    with pytest.raises(FormatError):
        loads("rbhopf 1 coalgebra\nfield Q\ndim 1\n"
              "comul 0 0 0 1 1\ncomul 0 0 0 2 1\n")


def test_comments_and_blank_lines_ignored():
    doc = loads("# comment\nrbhopf 1 coalgebra\n\nfield Q\ndim 1\n"
                "comul 0 0 0 1 1\n")
    assert doc.payload.dim == 1


def test_trailing_garbage_rejected():
    with pytest.raises(FormatError):
        loads("rbhopf 1 coalgebra\nfield Q\ndim 1\ncomul 0 0 0 1 1\nwat 1\n")


def test_field_mismatch_between_files(tmp_path):
    save(builtin("group:C2", GF(2)), tmp_path / "h.rbh")
    text = ("rbhopf 1 module\nfield Q\nside right\nhopf h.rbh\nmdim 1\n")
    (tmp_path / "m.rbh").write_text(text)
    with pytest.raises(FormatError):
        load(tmp_path / "m.rbh")
