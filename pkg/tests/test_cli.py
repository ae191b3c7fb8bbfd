import json

from ducci import DucciTuple, Modulus, component_of, export_dot
from ducci.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
import ducci.cli as cli
import ducci.kernel as kernel_mod


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def strip_seconds(csv_text):
    lines = csv_text.strip().splitlines()
    return [",".join(ln.split(",")[:-1]) for ln in lines]


class TestSingleCommands:
    def test_step(self, capsys):
        code, out, _ = run(capsys, "step", "--m", "4", "--tuple", "3,0,3")
        assert (code, out) == (EXIT_OK, "3,3,2\n")

    def test_orbit_default_eight(self, capsys):
        code, out, _ = run(capsys, "orbit", "--m", "4", "--tuple", "3,0,3")
        assert code == EXIT_OK
        assert out.splitlines() == [
            "3,0,3", "3,3,2", "2,1,1", "3,2,3", "1,1,2", "2,3,3", "1,2,1", "3,3,2",
        ]

    def test_lenper(self, capsys):
        code, out, _ = run(capsys, "lenper", "--m", "4", "--tuple", "3,0,3")
        assert (code, out) == (EXIT_OK, "len=1 per=6\n")

    def test_basic(self, capsys):
        code, out, _ = run(capsys, "basic", "--m", "4", "--n", "3")
        assert (code, out) == (EXIT_OK, "L=2 P=6\n")

    def test_preds_json(self, capsys):
        code, out, _ = run(capsys, "preds", "--m", "4", "--tuple", "3,0,3")
        assert code == EXIT_OK
        assert json.loads(out) == {
            "target": "3,0,3",
            "count": 2,
            "solutions": ["1,2,2", "3,0,0"],
        }

    def test_coeffs_csv(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--m", "4", "--n", "3", "--row", "3")
        assert code == EXIT_OK
        assert out.splitlines() == [
            "r,s,value,mode", "3,1,2,reduced", "3,2,3,reduced", "3,3,3,reduced",
        ]

    def test_coeffs_row_range_exact(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--m", "4", "--n", "3", "--row", "0:1", "--exact")
        assert code == EXIT_OK
        assert out.splitlines()[1:] == [
            "0,1,1,exact", "0,2,0,exact", "0,3,0,exact",
            "1,1,1,exact", "1,2,1,exact", "1,3,0,exact",
        ]

    def test_kernel_size(self, capsys):
        code, out, _ = run(capsys, "kernel", "--m", "4", "--n", "3")
        assert (code, out) == (EXIT_OK, "size=16\n")

    def test_kernel_membership(self, capsys):
        code, out, _ = run(capsys, "kernel", "--m", "4", "--tuple", "0,0,1")
        assert (code, out) == (EXIT_OK, "predicate=false oracle=false\n")

    def test_graph_component_matches_api(self, capsys):
        code, out, _ = run(capsys, "graph", "--m", "4", "--component", "0,0,1")
        assert code == EXIT_OK
        comp = component_of(DucciTuple.from_text("0,0,1", Modulus(4)))
        assert out == export_dot(comp)

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "orbit.txt"
        code, out, _ = run(capsys, "step", "--m", "4", "--tuple", "3,0,3", "--out", str(path))
        assert code == EXIT_OK and out == ""
        assert path.read_text() == "3,3,2\n"


class TestVerify:
    def test_length_sweep_csv(self, capsys):
        code, out, _ = run(
            capsys, "verify", "length", "--m", "2:6", "--n", "1:3", "--odd-n"
        )
        assert code == EXIT_OK
        rows = strip_seconds(out)
        assert rows[0] == "m,l,m1,n,predicted_L,measured_L,kernel_formula,kernel_measured,mismatches,budget_exceeded"
        assert rows[1] == "2,1,1,1,1,1,,,0,false"
        assert len(rows) == 1 + 5 * 2  # m in 2..6, n in {1, 3}

    def test_kernel_sweep_values(self, capsys):
        code, out, _ = run(capsys, "verify", "kernel", "--m", "4", "--n", "3")
        assert code == EXIT_OK
        row = strip_seconds(out)[1]
        assert row == "4,2,1,3,2,2,16,16,0,false"

    def test_oddsum_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "oddsum", "--m", "2", "--n", "3:5", "--odd-n")
        assert code == EXIT_OK
        assert strip_seconds(out)[1] == "2,1,1,3,1,1,,,0,false"

    def test_oddsum_rejects_odd_modulus(self, capsys):
        # m=3 has l=0: outside the lemma hypothesis, a usage error.
        code, _, err = run(capsys, "verify", "oddsum", "--m", "2:4", "--n", "3")
        assert code == EXIT_USAGE and "even" in err

    def test_preds_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "preds", "--m", "3:4", "--n", "2:3")
        assert code == EXIT_OK
        rows = strip_seconds(out)
        assert rows[0] == "m,l,m1,n,checked,mismatches,budget_exceeded"
        assert rows[1] == "3,0,3,2,9,0,false"
        assert len(rows) == 5

    def test_coeffs_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "coeffs", "--m", "4", "--n", "3")
        assert code == EXIT_OK
        row = strip_seconds(out)[1]
        assert row == "4,2,1,3,true,true,true,true,true"

    def test_json_format_one_object_per_line(self, capsys):
        code, out, _ = run(
            capsys, "verify", "length", "--m", "2:3", "--n", "3", "--format", "json"
        )
        assert code == EXIT_OK
        objs = [json.loads(line) for line in out.splitlines()]
        assert [o["m"] for o in objs] == [2, 3]
        assert all(o["predicted_L"] == o["measured_L"] for o in objs)

    def test_text_format(self, capsys):
        code, out, _ = run(
            capsys, "verify", "length", "--m", "2", "--n", "3", "--format", "text"
        )
        assert code == EXIT_OK
        assert out.startswith("m=2 l=1 m1=1 n=3 predicted_L=1 measured_L=1")

    def test_deterministic_output(self, capsys):
        a = run(capsys, "verify", "kernel", "--m", "2:4", "--n", "3", "--odd-n")
        b = run(capsys, "verify", "kernel", "--m", "2:4", "--n", "3", "--odd-n")
        assert strip_seconds(a[1]) == strip_seconds(b[1])

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        # Wire-level contract: a failing report must exit 1.
        broken = kernel_mod.KernelReport(
            modulus=Modulus(4), n=3, predicted_L=2, measured_L=1
        )
        monkeypatch.setattr(cli.kernel_mod, "verify_length_theorem", lambda *a, **k: broken)
        code, out, _ = run(capsys, "verify", "length", "--m", "4", "--n", "3")
        assert code == EXIT_MISMATCH


class TestUsageErrors:
    def test_malformed_tuple(self, capsys):
        code, _, err = run(capsys, "step", "--m", "4", "--tuple", "3;0;3")
        assert code == EXIT_USAGE and "error" in err

    def test_out_of_range_entry(self, capsys):
        code, _, err = run(capsys, "step", "--m", "4", "--tuple", "3,0,5")
        assert code == EXIT_USAGE and "error" in err

    def test_kernel_predicate_even_n(self, capsys):
        code, _, err = run(capsys, "kernel", "--m", "4", "--tuple", "1,1")
        assert code == EXIT_USAGE and "odd" in err

    def test_modulus_one(self, capsys):
        code, _, err = run(capsys, "lenper", "--m", "1", "--tuple", "0,0")
        assert code == EXIT_USAGE

    def test_unknown_subcommand(self, capsys):
        code, _, _ = run(capsys, "conquer")
        assert code == EXIT_USAGE

    def test_missing_required_flag(self, capsys):
        code, _, _ = run(capsys, "step", "--m", "4")
        assert code == EXIT_USAGE

    def test_graph_needs_n_or_component(self, capsys):
        code, _, err = run(capsys, "graph", "--m", "4")
        assert code == EXIT_USAGE and "component" in err

    def test_bad_range(self, capsys):
        code, _, _ = run(capsys, "verify", "length", "--m", "9:2", "--n", "3")
        assert code == EXIT_USAGE

    def test_budget_error_is_usage(self, capsys):
        code, _, err = run(capsys, "orbit", "--m", "4", "--tuple", "3,0,3",
                           "--k", "100", "--budget", "10")
        assert code == EXIT_USAGE and "cap" in err
