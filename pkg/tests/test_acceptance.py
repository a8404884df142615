"""Acceptance suite: one test per criterion.

Each test records a one-line verdict; conftest prints them after the run.
Running this file directly prints the same lines without pytest.
"""
import json
import os
import random
import subprocess
import sys
import tempfile
import time
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oam import bits  # noqa: E402
from oam.arithmetic import (ArithmeticMatroid, Multiplicity, check_arithmetic, gcd_property,  # noqa: E402
                            gcd_witness, strong_gcd_property, strong_gcd_value)
from oam.bundle import check_bundle, oam_contract, oam_delete, oam_dual  # noqa: E402
from oam.chirotope import Chirotope, b2_violations, check_chirotope, check_gp  # noqa: E402
from oam.cli import main as cli_main  # noqa: E402
from oam.corpus import example_matrix, matrix_corpus  # noqa: E402
from oam.gpfunction import chi_m, leibniz_lhs, leibniz_rhs, propagate_from_bg1  # noqa: E402
from oam.matroid import Matroid  # noqa: E402
from oam.realization import (integer_representation, matrix_to_oam, rational_realization,  # noqa: E402
                             verify_representation)
from oam.search import (enumerate_orientations, equivalent_orientations,  # noqa: E402
                        find_orientation)
from oam.serialize import bundle_to_json, dumps, matrix_to_text  # noqa: E402

from oracles import det_leibniz, cols, gp_sorted  # noqa: E402

FULL3 = 0b111
M = bits.mask


def _corpus():
    return [matrix_to_oam(mx) for mx in matrix_corpus()]


_CACHE = {}


def corpus():
    if "c" not in _CACHE:
        _CACHE["c"] = (matrix_corpus(), _corpus())
    return _CACHE["c"]


def run_cli(argv):
    """Run the CLI in-process, returning (exit code, stdout text)."""
    from contextlib import redirect_stderr, redirect_stdout
    from io import StringIO

    out, err = StringIO(), StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli_main(argv)
    return code, out.getvalue()


def criterion(k, title):
    def deco(fn):
        def wrapper(record):
            record(k, title)
            return fn()
        wrapper.__name__ = fn.__name__
        wrapper.__doc__ = fn.__doc__
        wrapper.criterion = (k, title)
        wrapper.body = fn
        return wrapper
    return deco


@pytest.fixture
def record(request):
    def rec(k, title):
        request.node.user_properties.append(("criterion", f"{k:>2}. {title}"))
    return rec


@criterion(1, "matrix example: multiplicities, signs, check passes in < 1 s")
def test_criterion_01_example_fixture():
    with tempfile.TemporaryDirectory() as tmp:
        src = os.path.join(tmp, "ex.txt")
        Path(src).write_text(matrix_to_text(example_matrix(3)))
        start = time.perf_counter()
        code, out = run_cli(["from-matrix", src, "--quiet"])
        assert code == 0
        d = json.loads(out)
        table = [int(d["m"]["m"][str(s)]) for s in range(8)]
        assert table[0] == 1
        assert [table[M({e})] for e in (1, 2, 3)] == [1, 1, 1]
        assert [table[M(p)] for p in ({1, 2}, {1, 3}, {2, 3})] == [3, 3, 3]
        assert table[FULL3] == 3
        assert d["chi"]["signs"] == {"1,2": 1, "1,3": 1, "2,3": -1}
        bundle = os.path.join(tmp, "ex.json")
        Path(bundle).write_text(out)
        code, out = run_cli(["check", bundle, "--quiet"])
        elapsed = time.perf_counter() - start
        assert code == 0 and json.loads(out)["verdict"] == "pass"
        assert elapsed < 1.0, elapsed


@criterion(2, "m(E) := 1 is arithmetic and orientable, fails GCD and strong GCD at A = E")
def test_criterion_02_non_representable_orientable():
    oam = matrix_to_oam(example_matrix(3))
    am = ArithmeticMatroid(oam.matroid, oam.m.replace(FULL3, 1))
    assert check_arithmetic(am) == []
    assert not gcd_property(am) and gcd_witness(am) == FULL3
    assert not strong_gcd_property(am)
    assert strong_gcd_value(am.matroid, am.m, FULL3) == 3 != am.m(FULL3)
    chi = find_orientation(am)
    assert chi is not None and check_bundle(am.matroid, am.m, chi).ok
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "mod.json")
        Path(path).write_text(dumps(bundle_to_json(am.matroid, am.m)))
        code, out = run_cli(["orient", path, "--quiet"])
        assert code == 0 and json.loads(out)["chi"]["signs"]


@criterion(3, "every deletion, contraction and dual of 200 random matrices passes check")
def test_criterion_03_minor_closure():
    start = time.perf_counter()
    _, oams = corpus()
    count = 0
    for oam in oams:
        for a in range(1 << oam.n):
            for minor in (oam_delete(oam, a), oam_contract(oam, a)):
                res = check_bundle(minor.matroid, minor.m, minor.chi)
                assert res.ok, (oam, bits.fmt(a), res.verdicts)
                count += 1
        d = oam_dual(oam)
        assert check_bundle(d.matroid, d.m, d.chi).ok, oam
        count += 1
    assert time.perf_counter() - start < 60
    assert count > 200


@criterion(4, "Leibniz expansion equals f(a)^(r-1) f(b) on 100 tuple pairs per corpus matrix")
def test_criterion_04_leibniz():
    _, oams = corpus()
    rng = random.Random(4)
    for oam in oams:
        f = chi_m(oam.chi, oam.m)
        for _ in range(100):
            a = tuple(rng.randint(1, oam.n) for _ in range(oam.r))
            b = tuple(rng.randint(1, oam.n) for _ in range(oam.r))
            assert leibniz_rhs(f, a, b) == leibniz_lhs(f, a, b), (oam, a, b)


def _brute_witness(chi1, chi2):
    for a in range(1 << chi1.n):
        for sign in (1, -1):
            if {s: sign * v * (-1) ** bits.size(s & a) for s, v in chi1.signs.items()} == chi2.signs:
                return a, sign
    return None


@criterion(5, "orientations are unique up to re-orientation (n <= 6), witness matches brute force")
def test_criterion_05_uniqueness():
    _, oams = corpus()
    multi = 0
    for oam in oams:
        if oam.n > 6:
            continue
        am = oam.arithmetic
        found = list(enumerate_orientations(am))
        assert any(c == oam.chi for c in found)
        if len(found) < 2:
            continue
        multi += 1
        first = found[0]
        for chi in found:
            w = equivalent_orientations(first, chi, am)
            assert w is not None and w.apply(first) == chi
            assert (w.flip, w.sign) == _brute_witness(first, chi)
    assert multi > 0


@criterion(6, "(U(2,4), m = 1) has no orientation: enumeration, search and CLI exit 3")
def test_criterion_06_non_orientable():
    mat = Matroid.uniform(2, 4)
    am = ArithmeticMatroid(mat, Multiplicity.constant(4))
    bases = sorted(mat.bases)
    msets = {frozenset(bits.elements(s)): 1 for s in range(16)}
    patterns = 0
    for signs in product((1, -1), repeat=len(bases)):
        patterns += 1
        table = {frozenset(bits.elements(b)): s for b, s in zip(bases, signs)}
        assert gp_sorted(table, msets, 4, 2)
    assert patterns == 64
    assert list(enumerate_orientations(am)) == []
    assert find_orientation(am) is None
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "u24.json")
        Path(path).write_text(dumps(bundle_to_json(mat, am.m)))
        assert run_cli(["orient", path, "--quiet"])[0] == 3


@criterion(7, "GP implies the chirotope axioms; 50 mutated tables violating them fail GP")
def test_criterion_07_gp_implies_b2():
    _, oams = corpus()
    for oam in oams:
        if not check_gp(oam.chi, oam.m):
            assert check_chirotope(oam.chi)
    rng = random.Random(7)
    mutated = 0
    tries = 0
    while mutated < 50:
        tries += 1
        assert tries < 100000
        oam = rng.choice(oams)
        if len(oam.chi.signs) < 3:
            continue
        keys = sorted(oam.chi.signs)
        flip = set(rng.sample(keys, rng.randint(1, len(keys) - 1)))
        chi = Chirotope(oam.n, oam.r, {s: -v if s in flip else v for s, v in oam.chi.signs.items()})
        if not b2_violations(chi, limit=1):
            continue
        mutated += 1
        assert check_gp(chi, oam.m, limit=1)


@criterion(8, "rational realization det identity on the corpus; integer representation under strong GCD")
def test_criterion_08_realization():
    _, oams = corpus()
    strong = 0
    for oam in oams:
        real = rational_realization(oam)
        f = chi_m(oam.chi, oam.m)
        scale = f(oam.matroid.anchor) ** (oam.r - 1)
        for s in bits.k_subsets(oam.n, oam.r):
            assert real.minor(s) == scale * f(s)
        if strong_gcd_property(oam.arithmetic):
            strong += 1
            rep = integer_representation(oam)
            assert verify_representation(rep, oam.arithmetic)
            assert rep.index == oam.m(oam.matroid.anchor) ** (oam.r - 1) * oam.m(oam.matroid.ground)
    assert strong > 0


@criterion(9, "propagation from the anchor neighbourhood reproduces every minor")
def test_criterion_09_propagation():
    mats, oams = corpus()
    for mx, oam in zip(mats, oams):
        b0 = oam.matroid.anchor
        local = {b: v for b, v in oam.chi.signs.items() if (b ^ b0).bit_count() <= 2}
        f = propagate_from_bg1(oam.m, local, b0, oam.matroid.bases)
        rows = mx.as_lists()
        for s in bits.k_subsets(oam.n, oam.r):
            assert f(s) == det_leibniz(cols(rows, bits.elements(s)))


def _fixture_files(tmp):
    paths = {}
    oam = matrix_to_oam(example_matrix(3))
    paths["example"] = matrix_to_text(example_matrix(3))
    paths["example_bundle"] = dumps(bundle_to_json(oam.matroid, oam.m, oam.chi))
    paths["modified"] = dumps(bundle_to_json(oam.matroid, oam.m.replace(FULL3, 1)))
    u = Matroid.uniform(2, 4)
    paths["u24"] = dumps(bundle_to_json(u, Multiplicity.constant(4)))
    for k, mx in enumerate(matrix_corpus()[:8]):
        paths[f"corpus{k}"] = matrix_to_text(mx)
    out = {}
    for name, text in paths.items():
        p = os.path.join(tmp, name)
        Path(p).write_text(text)
        out[name] = p
    return out


COMMANDS = [
    ["check"], ["from-matrix"], ["orient"], ["orient", "--all-canonical"], ["minor", "--delete", "1"],
    ["minor", "--contract", "1"], ["dual"], ["realize"], ["realize", "--integer"], ["graph"],
    ["graph", "--anchor", "1,2"],
]


@criterion(10, "every CLI command gives byte-identical output on repeated runs")
def test_criterion_10_determinism():
    with tempfile.TemporaryDirectory() as tmp:
        files = _fixture_files(tmp)
        runs = 0
        for name, path in files.items():
            for cmd in COMMANDS:
                argv = cmd[:1] + [path] + cmd[1:] + ["--quiet"]
                first = run_cli(argv)
                assert run_cli(argv) == first, argv
                runs += 1
        # separate processes with different hash seeds
        for cmd in (["from-matrix"], ["orient", "--all-canonical"], ["graph"], ["check"]):
            outs = set()
            for seed in ("1", "2"):
                env = {**os.environ, "PYTHONHASHSEED": seed}
                proc = subprocess.run([sys.executable, "-m", "oam", cmd[0], files["example"], *cmd[1:],
                                       "--quiet"], capture_output=True, env=env, check=False)
                outs.add((proc.returncode, proc.stdout))
            assert len(outs) == 1, cmd
        assert runs == len(files) * len(COMMANDS)


CRITERIA = [test_criterion_01_example_fixture, test_criterion_02_non_representable_orientable,
            test_criterion_03_minor_closure, test_criterion_04_leibniz, test_criterion_05_uniqueness,
            test_criterion_06_non_orientable, test_criterion_07_gp_implies_b2,
            test_criterion_08_realization, test_criterion_09_propagation,
            test_criterion_10_determinism]


if __name__ == "__main__":
    failed = 0
    for fn in CRITERIA:
        k, title = fn.criterion
        try:
            fn.body()
            verdict = "PASS"
        except Exception as exc:  # report and keep going
            verdict = f"FAIL ({type(exc).__name__}: {exc})"
            failed += 1
        print(f"criterion {k:>2}: {verdict}  {title}")
    sys.exit(1 if failed else 0)
