import json

import pydot
import pytest

from pyfedcoalition.common import instanceio
from pyfedcoalition.exceptions import InstanceParseError, InstanceValidationError, InvalidInputError
from pyfedcoalition.fcFormer import formCoalitions
from pyfedcoalition.fcGraph import FcPartition
from pyfedcoalition.fcInstance import FcInstanceSpec, FcWeightDist, generateInstance

from strategies import EICU_COALITIONS, makeInstance


def writeJSON(path, data):
    path.write_text(json.dumps(data), encoding='utf-8')
    return path


class TestInstanceFiles:
    def test_round_trip(self, tmp_path):
        alphas = (0.0, 0.1, 0.3, 0.6, 1.0)
        for k in range(100):
            spec = FcInstanceSpec(k % 12 + 1, alphas[k % len(alphas)], FcWeightDist.uniform(0.1, 1.0), 0.5, seed=k)
            instance = generateInstance(spec)
            path = tmp_path / f"instance_{k}.json"
            instanceio.saveInstance(instance, path)
            assert instanceio.loadInstance(path) == instance

    def test_labels_survive(self, tmp_path):
        instance = makeInstance(2, [(0, 1, 0.5)], [], ["a", "b"])
        instanceio.saveInstance(instance, tmp_path / "x.json")
        assert instanceio.loadInstance(tmp_path / "x.json").labels == ("a", "b")

    def test_document_shape(self):
        data = instanceio.instanceToDict(makeInstance(3, [(2, 0, 0.5)], [(2, 1)]))
        assert data == {'n': 3, 'benefit': [{'src': 2, 'dst': 0, 'w': 0.5}], 'competing': [[1, 2]]}

    def test_negative_weight(self, tmp_path):
        path = writeJSON(tmp_path / "neg.json", {'n': 2, 'benefit': [{'src': 0, 'dst': 1, 'w': -0.5}], 'competing': []})
        with pytest.raises(InstanceValidationError):
            instanceio.loadInstance(path)

    def test_self_loop(self, tmp_path):
        path = writeJSON(tmp_path / "loop.json", {'n': 2, 'benefit': [{'src': 1, 'dst': 1, 'w': 0.5}], 'competing': []})
        with pytest.raises(InstanceValidationError):
            instanceio.loadInstance(path)

    def test_duplicate_competing_pair(self, tmp_path):
        path = writeJSON(tmp_path / "dup.json", {'n': 3, 'benefit': [], 'competing': [[0, 1], [1, 0]]})
        with pytest.raises(InstanceValidationError):
            instanceio.loadInstance(path)

    def test_field_context(self, tmp_path):
        path = writeJSON(tmp_path / "field.json", {'n': 2, 'benefit': [{'src': 0, 'dst': 1}], 'competing': []})
        with pytest.raises(InstanceParseError, match=r"benefit\[0\]\.w"):
            instanceio.loadInstance(path)

    def test_line_context(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{\n  "n": 2,\n  "benefit": [\n', encoding='utf-8')
        with pytest.raises(InstanceParseError, match=r"broken\.json:\d+:\d+"):
            instanceio.loadInstance(path)

    def test_invalid_utf8(self, tmp_path):
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"n": 1, "labels": ["caf\xe9"]}')
        with pytest.raises(InstanceParseError, match="UTF-8"):
            instanceio.loadInstance(path)

    def test_weight_beyond_float_range(self, tmp_path):
        path = tmp_path / "huge.json"
        path.write_text('{"n": 2, "benefit": [{"src": 0, "dst": 1, "w": 1' + "0" * 400 + '}], "competing": []}',
                        encoding='utf-8')
        with pytest.raises(InstanceValidationError, match=r"Benefit edge \(0, 1\)"):
            instanceio.loadInstance(path)

    def test_integer_literal_past_conversion_limit(self, tmp_path):
        path = tmp_path / "huger.json"
        path.write_text('{"n": 2, "benefit": [{"src": 0, "dst": 1, "w": 1' + "0" * 5000 + '}], "competing": []}',
                        encoding='utf-8')
        with pytest.raises(InvalidInputError):
            instanceio.loadInstance(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            instanceio.loadInstance(tmp_path / "absent.json")


class TestPartitionFiles:
    def test_load(self, tmp_path):
        path = writeJSON(tmp_path / "p.json", [[2, 0], [1]])
        assert instanceio.loadPartition(path, 3) == FcPartition(3, [[0, 2], [1]])

    def test_not_covering(self, tmp_path):
        path = writeJSON(tmp_path / "p.json", [[0], [1]])
        with pytest.raises(InstanceValidationError):
            instanceio.loadPartition(path, 3)

    def test_wrong_shape(self, tmp_path):
        path = writeJSON(tmp_path / "p.json", {'blocks': [[0]]})
        with pytest.raises(InstanceParseError):
            instanceio.loadPartition(path, 1)


def clusterNames(dot):
    return sorted(g.get_name() for g in dot.get_subgraphs())


class TestDotExport:
    def test_singletons(self, eicu):
        dot = instanceio.toPydot(eicu, FcPartition.singletons(10))
        assert len(dot.get_subgraphs()) == 10

    def test_grand_coalition(self, eicu):
        assert len(instanceio.toPydot(eicu, FcPartition.grand(10)).get_subgraphs()) == 1

    def test_eicu_clusters(self, eicu, tmp_path):
        partition, _ = formCoalitions(*eicu)
        path = tmp_path / "eicu.dot"
        instanceio.exportDot(eicu, partition, path)
        text = path.read_text(encoding='utf-8')
        assert text.count("subgraph cluster_coalition_") == len(EICU_COALITIONS)
        assert text.count("style=dashed") == len(eicu.competing.pairs)
        [parsed] = pydot.graph_from_dot_data(text)
        assert clusterNames(parsed) == ["cluster_coalition_0", "cluster_coalition_1"]
        members = sorted(
            sorted(int(name[1:]) for name in (node.get_name().strip('"') for node in g.get_nodes()) if name[:1] == "v")
            for g in parsed.get_subgraphs()
        )
        assert members == EICU_COALITIONS

    def test_stable_output(self, eicu):
        partition, _ = formCoalitions(*eicu)
        assert instanceio.toPydot(eicu, partition).to_string() == instanceio.toPydot(eicu, partition).to_string()

    def test_labels_are_quoted(self):
        instance = makeInstance(2, [(0, 1, 1.0)], [], ['site "A"', "site B"])
        text = instanceio.toPydot(instance, FcPartition.singletons(2)).to_string()
        assert "site B" in text
        assert pydot.graph_from_dot_data(text)
