import math
import os

import pytest

from isocompress import constants
from isocompress.algebra.bit_string import BitString
from isocompress.cli.cli import main
from isocompress.cli.reporter import format_value
from isocompress.cli.run_config import RunConfig, parse_seed_space
from isocompress.enuns.output_mode import OutputMode
from isocompress.errors import ConfigError


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def fields(line: str) -> dict[str, str]:
    return dict(pair.split("=", 1) for pair in line.split())


class TestCompress:

    def test_round_trip_through_files(self, capsys, tmp_path):
        archive = str(tmp_path / "weight_one.ilc")
        decoded = tmp_path / "decoded.txt"
        code, out, _ = run(capsys, "compress", "--lang", "hamming:8:1", "--all", "--out", archive, "--output", "lines")
        assert code == 0
        assert fields(out.strip()) == {
            "result": "compress", "lang": "hamming:8:1", "n": "8", "k": "3",
            "records": "8", "bits_per_record": "84", "archive": archive,
        }

        code, _, _ = run(capsys, "decompress", "--archive", archive, "--lang", "hamming:8:1", "--out", str(decoded))
        assert code == 0
        expected = sorted(BitString(1 << p, 8).to_text() for p in range(8))
        assert decoded.read_text(encoding="utf-8").split() == expected

    def test_input_file(self, capsys, tmp_path, write_lines):
        archive = str(tmp_path / "two.ilc")
        source = write_lines(["00000100", "", "01000000"])
        code, out, _ = run(capsys, "compress", "--lang", "hamming:8:1", "--input", source, "--out", archive)
        assert code == 0
        assert "records: 2" in out

    def test_non_member_is_a_domain_error(self, capsys, tmp_path, write_lines):
        source = write_lines(["00000110"])
        code, _, err = run(capsys, "compress", "--lang", "hamming:8:1", "--input", source, "--out", str(tmp_path / "x.ilc"))
        assert code == 1
        assert "NotInLanguage" in err

    def test_output_independent_of_jobs(self, capsys, tmp_path):
        archive = str(tmp_path / "shared.ilc")
        argv = ["compress", "--lang", "hamming:10:2", "--all", "--out", archive, "--output", "lines"]
        _, serial, _ = run(capsys, *argv, "--jobs", "1")
        serial_bytes = open(archive, "rb").read()
        _, pooled, _ = run(capsys, *argv, "--jobs", "2")
        assert serial == pooled
        assert open(archive, "rb").read() == serial_bytes


class TestErrors:

    def test_truncated_archive(self, capsys, tmp_path):
        broken = tmp_path / "broken.ilc"
        broken.write_bytes(b"ILC1\x01\x08")
        code, _, err = run(capsys, "decompress", "--archive", str(broken), "--lang", "hamming:8:1", "--out", str(tmp_path / "o"))
        assert code == 1
        assert "FormatError" in err

    def test_output_under_a_missing_directory(self, capsys, tmp_path):
        target = tmp_path / "absent" / "a.ilc"
        code, _, err = run(capsys, "compress", "--lang", "hamming:8:1", "--all", "--out", str(target))
        assert code == 2
        assert "ConfigError" in err and "Traceback" not in err
        assert not target.parent.exists()

    def test_output_that_is_a_directory(self, capsys, tmp_path):
        archive = str(tmp_path / "one.ilc")
        run(capsys, "compress", "--lang", "hamming:8:1", "--all", "--out", archive)
        code, _, err = run(capsys, "decompress", "--archive", archive, "--lang", "hamming:8:1", "--out", str(tmp_path))
        assert code == 2
        assert "ConfigError" in err

    def test_missing_flag(self, capsys):
        code, _, _ = run(capsys, "compress", "--lang", "hamming:8:1", "--all")
        assert code == 2

    def test_bad_seed_space(self, capsys, tmp_path):
        code, _, err = run(capsys, "compress", "--lang", "hamming:8:1", "--all", "--out", str(tmp_path / "a"), "--seed-space", "3")
        assert code == 2
        assert "ConfigError" in err

    def test_unknown_language(self, capsys, tmp_path):
        code, _, _ = run(capsys, "compress", "--lang", "cube:8", "--all", "--out", str(tmp_path / "a"))
        assert code == 2


class TestDistinguish:

    def test_build_run_verify(self, capsys, tmp_path):
        descriptor = str(tmp_path / "x.ilc")
        code, out, _ = run(capsys, "distinguish", "build", "--lang", "hamming:12:2", "--x", "000000000011",
                           "--out", descriptor, "--output", "lines")
        assert code == 0
        built = fields(out.strip())
        assert built["k"] == "7" and built["bits"] == "88" and built["overhead"] == "81"

        _, out, _ = run(capsys, "distinguish", "run", "--descriptor", descriptor, "--lang", "hamming:12:2",
                        "--candidate", "000000000011", "--output", "lines")
        assert fields(out.strip())["verdict"] == "accept"
        _, out, _ = run(capsys, "distinguish", "run", "--descriptor", descriptor, "--lang", "hamming:12:2",
                        "--candidate", "000000000101", "--output", "lines")
        assert fields(out.strip())["verdict"] == "reject"

        _, out, _ = run(capsys, "distinguish", "verify", "--descriptor", descriptor, "--lang", "hamming:12:2",
                        "--full-sweep", "--output", "lines")
        assert fields(out.strip())["unique"] == "true"

    def test_stats(self, capsys, tmp_path):
        archive = str(tmp_path / "all.ilc")
        run(capsys, "compress", "--lang", "hamming:12:2", "--all", "--out", archive)
        code, out, _ = run(capsys, "stats", "--archive", archive, "--output", "lines")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 67
        summary = fields(lines[-1])
        assert summary["result"] == "stats"
        assert int(summary["overhead"]) <= 81


class TestExperiments:

    def test_drbound(self, capsys):
        code, out, _ = run(capsys, "drbound", "--N", "64", "--k", "4", "--c", "1", "--output", "lines")
        assert code == 0
        assert out.strip() == "result=drbound N=64 k=4 c=1 drbound=19.2"

    def test_collision(self, capsys):
        _, out, _ = run(capsys, "verify", "collision", "--n", "3", "--k", "1", "--output", "lines")
        result = fields(out.strip())
        assert result["expected"] == "1/4"
        assert result["exact"] == "true"
        assert result["pairs"] == "28"

    def test_fullrank_exact(self, capsys):
        _, out, _ = run(capsys, "verify", "fullrank", "--n", "3", "--k", "1", "--output", "lines")
        result = fields(out.strip())
        assert result["mode"] == "exact"
        assert result["count"] == "42" and result["match"] == "true"

    def test_fullrank_monte_carlo(self, capsys):
        _, out, _ = run(capsys, "verify", "fullrank", "--n", "12", "--k", "3", "--trials", "500", "--output", "lines")
        result = fields(out.strip())
        assert result["mode"] == "monte_carlo"
        assert result["trials"] == "500"

    def test_isolation(self, capsys):
        code, out, _ = run(capsys, "verify", "isolation", "--lang", "hamming:8:1", "--k", "3", "--variant", "Ttilde",
                           "--trials", "200", "--mc-seed", "4", "--output", "lines")
        assert code == 0
        result = fields(out.strip())
        assert result["variant"] == "Ttilde"
        assert result["meets_bound"] == "true"

    def test_seeds(self, capsys):
        code, out, _ = run(capsys, "verify", "seeds", "--lang", "hamming:8:1", "--k", "3", "--seeds", "128",
                           "--output", "lines")
        assert code == 0
        assert fields(out.strip())["seeds"] == "128"

    def test_coverfree(self, capsys, write_lines):
        family = write_lines(["2 3", "1 2", "1", "2"], "family.txt")
        code, out, _ = run(capsys, "coverfree", "check", "--family", family, "--k", "2", "--c", "1", "--output", "lines")
        assert code == 0
        result = fields(out.strip())
        assert result["cover_free"] == "false"
        assert result["covered"] == "{1,2}"
        assert result["coverers"] == "{{1},{2}}"
        assert result["bound"] == "-"
        assert "min_c" not in result

    def test_coverfree_reports_the_minimal_constant(self, capsys, write_lines):
        family = write_lines(["3 3", "1", "2", "3"], "singletons.txt")
        _, out, _ = run(capsys, "coverfree", "check", "--family", family, "--k", "2", "--output", "lines")
        result = fields(out.strip())
        assert result["cover_free"] == "true"
        assert float(result["min_c"]) == pytest.approx(4 * math.log2(3) / 3 - 2)

        bundled = os.path.join(constants.FAMILY_DIRECTORY, "singletons.txt")
        _, out, _ = run(capsys, "coverfree", "check", "--family", bundled, "--k", "4", "--c", "1", "--output", "lines")
        result = fields(out.strip())
        assert result["min_c"] == "0"
        assert result["bound"] == "19.2"


class TestHelpers:

    def test_seed_space(self):
        assert parse_seed_space("2^20") == 2 ** 20
        assert parse_seed_space("4096") == 4096
        with pytest.raises(ConfigError):
            parse_seed_space("3^4")
        with pytest.raises(ConfigError):
            parse_seed_space("many")

    def test_format_value(self):
        assert format_value(True) == "true"
        assert format_value(19.2) == "19.2"
        assert format_value(frozenset({3, 1})) == "{1,3}"
        assert format_value(None) == "-"

    def test_run_config(self):
        config = RunConfig(jobs=3, seed_space=2 ** 10, scan_cap=12, output_mode=OutputMode.LINES, log_level="debug")
        assert config.get_jobs() == 3
        assert config.get_seed_space() == 2 ** 10
        assert config.get_scan_cap() == 12
        assert config.get_output_mode() is OutputMode.LINES
        assert config.get_log_level() == "DEBUG"
        assert config.make_expander().get_seed_space() == 2 ** 10
        with pytest.raises(ConfigError):
            RunConfig(log_level="chatty")
