"""
Unit tests for stated values and the instance corpus.
"""

import pytest

from src.graph import CombineKind, GraphFamily, parse_graph_spec
from src.verify import KnownValue, middle_cycle_colouring, predicted_value, predicted_values
from src.verify.corpus import (
    derivative_specs,
    family_specs,
    general_specs,
    named_specs,
    pair_specs,
    random_graph_specs,
    random_tree_specs,
)
from src.verify.schemas import CorpusConfig


class TestFamilyPredictions:
    """Tests for stated family values."""

    def test_path(self):
        prediction = predicted_value(parse_graph_spec("P6"))
        assert prediction.claim_id == "path-values"
        assert (prediction.j, prediction.j_star) == (2, 3)

    @pytest.mark.parametrize("n,value", [(3, 3), (4, 2), (6, 3), (5, None), (7, None)])
    def test_cycle(self, n, value):
        prediction = predicted_value(parse_graph_spec(f"C{n}"), "cycle-values")
        assert prediction.j == value
        assert prediction.admissible is (value is not None)

    def test_star(self):
        prediction = predicted_value(parse_graph_spec("K1,4"))
        assert (prediction.j, prediction.j_star) == (2, 5)

    def test_complete_and_null(self):
        assert predicted_value(parse_graph_spec("K5")).j == 5
        assert predicted_value(parse_graph_spec("N3")).claim_id == "null-convention"

    def test_no_statement(self):
        assert predicted_values(parse_graph_spec("Petersen")) == []
        assert predicted_value(parse_graph_spec("P1")) is None


class TestDerivativePredictions:
    """Tests for stated values of path and cycle derivatives."""

    def test_path_middle(self):
        prediction = predicted_value(parse_graph_spec("M(P5)"))
        assert prediction.claim_id == "path-middle-values"
        assert prediction.admissible is False
        assert prediction.j_star == 3

    def test_path_jump(self):
        assert predicted_value(parse_graph_spec("J(P5)")).j == 3
        assert predicted_value(parse_graph_spec("J(P8)")).j == 4
        assert predicted_value(parse_graph_spec("J(P4)")) is None

    def test_cycle_total(self):
        assert predicted_value(parse_graph_spec("T(C6)")).j == 4
        assert predicted_value(parse_graph_spec("T(C5)")).admissible is False

    def test_cycle_middle_divisible_by_three(self):
        assert predicted_value(parse_graph_spec("M(C9)")).j == 3

    def test_middle_cycle_colouring(self):
        c = middle_cycle_colouring(3)
        assert c.k == 3
        assert c.order == 6
        assert c.colour_of[:3] == (1, 3, 1)

    def test_middle_cycle_colouring_domain(self):
        with pytest.raises(ValueError):
            middle_cycle_colouring(2)

    def test_other_bases(self):
        assert predicted_values(parse_graph_spec("L(K4)")) == []


class TestCombinationPredictions:
    """Tests for stated values of coronas, joins and products."""

    def test_apex_corona(self):
        predictions = {p.claim_id: p for p in predicted_values(parse_graph_spec("K1 o C6"))}
        assert predictions["corona-admissibility"].admissible is True
        assert predictions["corona-apex-value"].j == 4

    def test_corona_requires_consecutive_values(self):
        predictions = {p.claim_id: p for p in predicted_values(parse_graph_spec("K3 o P2"))}
        assert predictions["corona-admissibility"].admissible is True
        assert predictions["corona-value"].j == 3
        assert "corona-apex-value" not in predictions

    def test_corona_inadmissible(self):
        prediction = predicted_value(parse_graph_spec("P2 o P2"), "corona-admissibility")
        assert prediction.admissible is False

    def test_join(self):
        assert predicted_value(parse_graph_spec("C5 + P2")).admissible is False
        assert predicted_value(parse_graph_spec("C6 + P2")).admissible is True

    def test_cartesian(self):
        assert predicted_value(parse_graph_spec("K3 x P2")).j == 3

    @pytest.mark.parametrize("name,value", [
        ("P3 x P3", 2), ("P3 x P4", 2), ("P3 x C4", 2), ("P3 x K3", 3), ("P3 x K4", 4),
        ("K3 x K3", 3), ("K3 x P4", 3), ("K3 x C4", 3), ("K3 x K4", 4), ("C6 x P2", 3),
    ])
    def test_cartesian_of_small_families(self, name, value):
        prediction = predicted_value(parse_graph_spec(name), "cartesian-max")
        assert prediction.j == value
        assert prediction.admissible is True

    @pytest.mark.parametrize("name,value", [("K1 o P2", 3), ("K1 o C3", 4), ("K1 o C6", 4)])
    def test_apex_corona_over_small_families(self, name, value):
        predictions = {p.claim_id: p for p in predicted_values(parse_graph_spec(name))}
        assert predictions["corona-admissibility"].admissible is True
        assert predictions["corona-apex-value"].j == value

    def test_custom_resolver(self):
        """Test that operand values can come from the solvers instead."""
        spec = parse_graph_spec("Petersen x P2")
        assert predicted_values(spec) == []

        def resolve(operand):
            return KnownValue(True, 3 if operand.is_family(GraphFamily.PETERSEN) else 2)

        assert predicted_value(spec, resolve=resolve).j == 3


class TestCorpus:
    """Tests for corpus generation from a CorpusConfig."""

    @pytest.fixture
    def config(self):
        return CorpusConfig(
            path_range=(2, 4), cycle_range=(3, 5), complete_range=(1, 3), star_range=(1, 2), null_range=(0, 1),
            random_tree_count=3, random_tree_max_order=6, random_graph_count=4, random_graph_max_order=6,
            derivative_range=(2, 3),
        )

    def test_family_specs(self, config):
        labels = [spec.label() for spec in family_specs(config)]
        assert labels == ["P2", "P3", "P4", "C3", "C4", "C5", "K1", "K2", "K3", "K1,1", "K1,2", "N0", "N1"]

    def test_random_specs_deterministic(self, config):
        assert random_tree_specs(config) == random_tree_specs(config)
        assert random_graph_specs(config) == random_graph_specs(config)
        assert all(3 <= spec.n <= 6 for spec in random_tree_specs(config))
        assert all(0.15 <= spec.edge_probability <= 0.7 for spec in random_graph_specs(config))

    def test_general_specs(self, config):
        assert len(general_specs(config)) == 13 + 3 + 4

    def test_derivative_specs(self, config):
        labels = [spec.label() for spec in derivative_specs(config)]
        assert labels[:5] == ["L(P2)", "M(P2)", "T(P2)", "J(P2)", "C(P2)"]
        assert "M(C3)" in labels
        assert len(labels) == 5 + 10

    def test_pair_and_named_specs(self):
        specs = pair_specs([("K1", "C6")], CombineKind.CORONA)
        assert specs[0].label() == "K1 o C6"
        assert [s.label() for s in named_specs(["P4", "K2,3"])] == ["P4", "K2,3"]
