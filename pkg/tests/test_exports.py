import json

from discnet import metric_timeseries, project_words, step_state
from discnet.exports import (
    fmt_number,
    network_dot_bytes,
    network_json_bytes,
    series_csv_bytes,
    triple_json_bytes,
)


class TestDot:
    def test_c1_word_triangle(self, c1_bip):
        payload = network_dot_bytes(project_words(c1_bip)).decode()
        edge_lines = [l for l in payload.splitlines() if "--" in l]
        assert edge_lines == [
            '  "discussion" -- "ideas";',
            '  "discussion" -- "knowledge";',
            '  "ideas" -- "knowledge";',
        ]
        assert payload.startswith("graph {")

    def test_isolated_nodes_listed(self, c1_bip):
        payload = network_dot_bytes(step_state(c1_bip, 0).word_net).decode()
        assert '"knowledge";' in payload
        assert "--" not in payload

    def test_label_quoting(self):
        from discnet import Network

        net = Network(kind="agents", nodes=('say "hi"', "b"), edges={("b", 'say "hi"'): 1})
        payload = network_dot_bytes(net).decode()
        assert '"say \\"hi\\""' in payload


class TestJson:
    def test_roundtrips_through_reader(self, c1_bip):
        payload = network_json_bytes(project_words(c1_bip), step=3)
        obj = json.loads(payload)
        assert obj["kind"] == "words"
        assert obj["step"] == 3
        assert obj["nodes"] == ["knowledge", "ideas", "discussion"]
        assert {"source": "discussion", "target": "ideas", "weight": 1} in obj["edges"]

    def test_edges_sorted(self, c1_bip):
        obj = json.loads(network_json_bytes(project_words(c1_bip)))
        pairs = [(e["source"], e["target"]) for e in obj["edges"]]
        assert pairs == sorted(pairs)

    def test_triple_wire_has_degree(self, c1_bip):
        obj = json.loads(triple_json_bytes(step_state(c1_bip, 2)))
        assert obj["step"] == 2
        assert obj["words"]["degree"]["ideas"] == 2
        assert obj["units"]["nodes"] == ["u1", "u2"]
        assert obj["agents"]["edges"] == [{"source": "A", "target": "B", "weight": 1}]


class TestCsv:
    def test_series_rows(self, c1_bip):
        series = metric_timeseries(c1_bip, "words", "total-degree")
        lines = series_csv_bytes(series).decode().splitlines()
        assert lines[0] == "step,metric,value"
        assert lines[1] == "0,total-degree,0"
        assert lines[-1] == "3,total-degree,6"
        assert len(lines) == 5

    def test_float_formatting(self, c1_bip):
        series = metric_timeseries(c1_bip, "units", "density")
        lines = series_csv_bytes(series).decode().splitlines()
        assert lines[3] == "2,density,1"  # u1-u2 edge on 2 nodes

    def test_fmt_number(self):
        assert fmt_number(0.0) == "0"
        assert fmt_number(2 / 3) == "0.666666666667"
        assert fmt_number(6) == "6"
        assert fmt_number(1.5e-11) == "1.5e-11"


class TestDeterminism:
    def test_identical_bytes_across_recomputation(self, c1, v1, policy):
        from discnet import build_bipartite, occurrence_matrix

        def render():
            matrix = occurrence_matrix(c1, v1, policy)
            bip = build_bipartite(matrix, c1, v1)
            return (
                network_json_bytes(project_words(bip)),
                network_dot_bytes(project_words(bip)),
                series_csv_bytes(metric_timeseries(bip, "units", "density")),
                triple_json_bytes(step_state(bip, 2)),
            )

        assert render() == render()
