"""Test the command line entry point."""
import json

import pytest

from argparser import parse_arguments
from hoppath.bench import suite
from hoppath.bench.suite import make_enumerator
from hoppath.graph.csr_file import is_binary_csr, read_graph
from hoppath.graph.generators import diamond
from hoppath.main import main
from hoppath.mode.common import suite_options_from_arguments
from hoppath.pefp.tiers import BatchOrder
from tests.test_bench import DroppingOracle

pytest_plugins = ("pytest_asyncio",)


@pytest.fixture
def query_file(tmp_path):  # noqa: ANN001, ANN201
    """One diamond query."""
    path = tmp_path / "queries.txt"
    path.write_text("0 3 2\n", encoding="utf-8")
    return path


class TestArguments:
    """Test parse_arguments."""

    def test_run_defaults(self) -> None:
        """Test the run subcommand defaults."""
        arguments = parse_arguments(["run", "--graph", "g.txt"])
        assert arguments.mode == "run"
        assert arguments.algorithms == "pefp"
        assert arguments.repetitions == 3
        assert arguments.buffer_cap == 4096
        assert arguments.theta1 is None

    def test_check_defaults(self) -> None:
        """Test the check subcommand runs every exact algorithm once."""
        arguments = parse_arguments(["check", "--graph", "g.txt"])
        assert arguments.algorithms == "oracle,bcdfs,join,pefp,pefp-fifo"
        assert arguments.repetitions == 1

    def test_batching_reaches_pefp(self) -> None:
        """Test that --batching fifo configures the pefp engine."""
        arguments = parse_arguments(["run", "--graph", "g.txt", "--batching", "fifo"])
        enumerator = make_enumerator("pefp", suite_options_from_arguments(arguments))
        assert enumerator.config.batching is BatchOrder.FIFO

    def test_mode_required(self) -> None:
        """Test that a subcommand must be named."""
        with pytest.raises(SystemExit):
            parse_arguments([])


class TestMain:
    """Test main."""

    async def test_gen(self, tmp_path, edge_list_file) -> None:  # noqa: ANN001
        """Test writing a query file."""
        output = tmp_path / "out.txt"
        await main(
            parse_arguments(
                ["gen", "--graph", str(edge_list_file), "--k", "2", "--count", "3",
                 "--output", str(output)],
            ),
        )
        lines = output.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "# seed=0 k=2"
        assert len(lines) == 4

    async def test_run_jsonl(self, tmp_path, edge_list_file, query_file) -> None:  # noqa: ANN001
        """Test a run with a structured report, result paths and diagnostics."""
        output, paths, dump = tmp_path / "report", tmp_path / "paths", tmp_path / "pre"
        await main(
            parse_arguments(
                ["run", "--graph", str(edge_list_file), "--queries", str(query_file),
                 "--algorithms", "pefp,join", "--repetitions", "1", "--format", "jsonl",
                 "--no-timing", "--output", str(output), "--emit-paths", str(paths),
                 "--dump-pre", str(dump)],
            ),
        )
        records = [json.loads(line) for line in output.read_text(encoding="utf-8").splitlines()]
        assert [record["algorithm"] for record in records] == ["pefp", "join"]
        assert all(record["count"] == 2 for record in records)
        assert all(record["total_ns"] == 0 for record in records)
        assert "0 1 3\n0 2 3\n" in paths.read_text(encoding="utf-8")
        assert dump.read_text(encoding="utf-8").startswith("# pre-bfs s=0 t=3 k=2")

    async def test_run_stats(self, tmp_path, edge_list_file, query_file) -> None:  # noqa: ANN001
        """Test the key=value counter blocks of every run."""
        output, stats = tmp_path / "report", tmp_path / "stats"
        await main(
            parse_arguments(
                ["run", "--graph", str(edge_list_file), "--queries", str(query_file),
                 "--algorithms", "pefp,bcdfs", "--repetitions", "1", "--buffer-cap", "2",
                 "--output", str(output), "--stats", str(stats)],
            ),
        )
        blocks = stats.read_text(encoding="utf-8").split("# ")[1:]
        assert blocks[0].startswith("pefp 0->3 k=2 status=ok\n")
        assert "\nemitted=2\n" in blocks[0]
        assert "\nexternal_writes=0\n" in blocks[0]
        assert "\npeak_buffer=2\n" in blocks[0]
        assert blocks[0].endswith("\ngenerated_by_length.0=2\n")
        assert blocks[1].startswith("bcdfs 0->3 k=2 status=ok\n")
        assert "\nraises=" in blocks[1]

    async def test_check(self, tmp_path, edge_list_file, query_file) -> None:  # noqa: ANN001
        """Test the default cross-check."""
        output = tmp_path / "check.txt"
        await main(
            parse_arguments(
                ["check", "--graph", str(edge_list_file), "--queries", str(query_file),
                 "--output", str(output)],
            ),
        )
        text = output.read_text(encoding="utf-8")
        assert text.count("count=2 status=ok") == 5
        assert "MISMATCH" not in text

    async def test_check_gate(self, tmp_path, edge_list_file, query_file, monkeypatch) -> None:  # noqa: ANN001
        """Test that a mismatch exits non-zero after writing the summary."""
        monkeypatch.setitem(suite.ALGORITHMS, DroppingOracle.name, DroppingOracle)
        output = tmp_path / "check.txt"
        with pytest.raises(SystemExit) as info:
            await main(
                parse_arguments(
                    ["check", "--graph", str(edge_list_file), "--queries",
                     str(query_file), "--algorithms", "oracle,dropping", "--output",
                     str(output)],
                ),
            )
        assert info.value.code == 1
        assert "MISMATCH" in output.read_text(encoding="utf-8")

    async def test_pre(self, tmp_path, edge_list_file, query_file) -> None:  # noqa: ANN001
        """Test the diagnostics dump."""
        output = tmp_path / "pre.txt"
        await main(
            parse_arguments(
                ["pre", "--graph", str(edge_list_file), "--queries", str(query_file),
                 "--output", str(output)],
            ),
        )
        assert "new old bar sd_s sd_t" in output.read_text(encoding="utf-8")

    async def test_convert_both_ways(self, tmp_path, edge_list_file) -> None:  # noqa: ANN001
        """Test edge list to CSR and back."""
        binary, text = tmp_path / "g.csr", tmp_path / "g.txt"
        await main(
            parse_arguments(
                ["convert", "--graph", str(edge_list_file), "--output", str(binary)],
            ),
        )
        assert is_binary_csr(binary)
        assert read_graph(binary) == diamond()
        await main(
            parse_arguments(["convert", "--graph", str(binary), "--output", str(text)]),
        )
        assert text.read_text(encoding="utf-8").splitlines()[1:] == [
            "0 1",
            "0 2",
            "1 3",
            "2 3",
        ]

    async def test_config_file(self, tmp_path, edge_list_file) -> None:  # noqa: ANN001
        """Test that config keys override flags."""
        config, output = tmp_path / "config.json", tmp_path / "out.txt"
        config.write_text(
            json.dumps({"graph": str(edge_list_file), "count": 2, "k": 1}),
            encoding="utf-8",
        )
        await main(parse_arguments(["gen", "-c", str(config), "--output", str(output)]))
        assert output.read_text(encoding="utf-8").splitlines()[0] == "# seed=0 k=1"

    async def test_missing_config(self, tmp_path) -> None:  # noqa: ANN001
        """Test a config path that does not exist."""
        with pytest.raises(SystemExit):
            await main(parse_arguments(["gen", "-c", str(tmp_path / "none.json")]))

    async def test_missing_graph_flag(self) -> None:
        """Test that --graph is required."""
        with pytest.raises(SystemExit):
            await main(parse_arguments(["gen"]))

    async def test_missing_graph_file(self, tmp_path) -> None:  # noqa: ANN001
        """Test a graph path that does not exist."""
        with pytest.raises(SystemExit):
            await main(parse_arguments(["pre", "--graph", str(tmp_path / "none.txt")]))

    async def test_binary_needs_output(self, edge_list_file) -> None:  # noqa: ANN001
        """Test that CSR output is never written to stdout."""
        with pytest.raises(SystemExit):
            await main(parse_arguments(["convert", "--graph", str(edge_list_file)]))
