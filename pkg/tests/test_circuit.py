"""Circuit DSL: parsing, serialization, validation, execution."""

import math

import numpy as np
import pytest

from dualsim import circuit as cir
from dualsim import qumodes
from oracles import gates_to_text, naive_qubit_state, random_circuit_text, random_qubit_gates

H_CIRCUIT = "register qubit 1\nH 0\nmeasure probabilities\n"


class TestParse:
    def test_hadamard_circuit(self):
        parsed = cir.parse(H_CIRCUIT)
        assert parsed.register == cir.Register("qubit", 1)
        assert parsed.instructions == (cir.Instruction("H", (0,), ()),)
        result = cir.execute(parsed, 42)
        assert result.values == (0.5, 0.5)

    def test_qumode_circuit_with_preparation(self):
        text = (
            "register qumode 2 cutoff 6\n"
            "prepare squeeze 0 0.5\n"
            "BS 0 1 0.7853981633974483 0\n"
            "measure expectation number\n"
        )
        parsed = cir.parse(text)
        result = cir.execute(parsed, 3)
        assert len(result.values) == 2
        prepared = qumodes.prepare_squeezed_vacuum(0.5, 6)
        expected_total = float(np.sum(np.arange(6) * np.abs(prepared) ** 2))
        assert abs(sum(result.values) - expected_total) < 1e-8

    def test_arity_mismatch_reports_line(self):
        with pytest.raises(cir.CircuitError) as info:
            cir.parse("register qubit 1\nH 0 1\nmeasure probabilities\n")
        diag = info.value.diagnostics[0]
        assert diag.line == 2
        assert "arity" in diag.reason

    def test_comments_and_blank_lines_ignored(self):
        text = "# demo\nregister qubit 1\n\nH 0  # superpose\n\nmeasure probabilities\n"
        assert cir.parse(text) == cir.parse(H_CIRCUIT)

    def test_crlf_accepted(self):
        assert cir.parse(H_CIRCUIT.replace("\n", "\r\n")) == cir.parse(H_CIRCUIT)

    @pytest.mark.parametrize(
        "text,line,fragment",
        [
            ("", 1, "missing register"),
            ("H 0\nmeasure probabilities\n", 1, "missing register"),
            ("register qubit 1\nmeasure probabilities\nH 0\n", 3, "after measure"),
            ("register qubit 1\nH 0\n", 2, "missing measure"),
            ("register qubit 1\nFOO 0\nmeasure probabilities\n", 2, "unknown gate"),
            ("register qubit 1\nH 0\nmeasure probabilities\nmeasure probabilities\n", 4, "after measure"),
            ("register qubit 1\nH zero\nmeasure probabilities\n", 2, "invalid wire"),
            ("register qubit 1\nRX 0 abc\nmeasure probabilities\n", 2, "invalid parameter"),
            ("register qubit 2\nH 9\nmeasure probabilities\n", 2, "out of range"),
            ("register qubit 1\nprepare squeeze 0 0.5\nmeasure probabilities\n", 2, "qumode"),
            ("register qumode 1 cutoff 4\nR 0 1\nprepare squeeze 0 0.1\nmeasure probabilities\n", 3, "precede"),
            ("register qubit 1\nmeasure expectation hadamard\n", 2, "unknown observable"),
            ("register qubit 1\nmeasure sample 0\n", 2, "shots"),
            ("register qubit 99\nmeasure probabilities\n", 1, "capacity"),
            ("register qumode 2 cutoff 1000\nmeasure probabilities\n", 1, "cutoff"),
            ("register qumode 999999999999 cutoff 64\nmeasure probabilities\n", 1, "capacity"),
            ("register qumode 4 cutoff 64\nmeasure probabilities\n", 1, "capacity"),
            ("register qubit 1\nregister qubit 1\nmeasure probabilities\n", 2, "duplicate register"),
            ("register qumode 1 cutoff 8\nmeasure variance paulix\n", 2, "local dimension 2"),
            ("register qumode 1 cutoff 4\nRX 0 0.5\nmeasure probabilities\n", 2, "requires a qubit register"),
            ("register qubit 1\nS 0 0.1 0.0\nmeasure probabilities\n", 2, "requires a qumode register"),
            ("register qubit 1\nRX 0 inf\nmeasure probabilities\n", 2, "non-finite"),
        ],
    )
    def test_error_catalog(self, text, line, fragment):
        with pytest.raises(cir.CircuitError) as info:
            cir.parse(text)
        assert any(d.line == line and fragment in d.reason for d in info.value.diagnostics), (
            info.value.diagnostics
        )

    def test_every_diagnostic_has_positive_line(self):
        rng = np.random.default_rng(1234)
        for _ in range(300):
            raw = bytes(rng.integers(0, 256, size=int(rng.integers(0, 120))))
            try:
                cir.parse(raw.decode("utf-8", errors="replace"))
            except cir.CircuitError as err:
                assert err.diagnostics
                assert all(d.line >= 1 for d in err.diagnostics)


class TestSerialize:
    def test_canonical_hadamard(self):
        assert cir.serialize(cir.parse(H_CIRCUIT)) == H_CIRCUIT

    def test_roundtrip_random_circuit(self):
        rng = np.random.default_rng(7)
        gates = random_qubit_gates(rng, 4, 10)
        text = gates_to_text(4, gates, "measure sample 250")
        parsed = cir.parse(text)
        assert cir.parse(cir.serialize(parsed)) == parsed

    def test_floats_roundtrip_bit_identically(self):
        theta = 0.1 + 0.2  # 0.30000000000000004
        text = f"register qubit 1\nRX 0 {theta!r}\nmeasure probabilities\n"
        parsed = cir.parse(text)
        again = cir.parse(cir.serialize(parsed))
        assert again.instructions[0].params[0] == theta

    def test_canonicalization_idempotent(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            text = random_circuit_text(rng)
            first = cir.serialize(cir.parse(text))
            assert cir.serialize(cir.parse(first)) == first

    def test_measure_variants_roundtrip(self):
        for tail in (
            "measure probabilities",
            "measure sample 17",
            "measure expectation number",
            "measure variance pauliz product",
        ):
            text = f"register qubit 2\nH 0\n{tail}\n"
            parsed = cir.parse(text)
            assert cir.parse(cir.serialize(parsed)) == parsed


class TestValidate:
    def test_valid_circuit_is_ok(self):
        assert cir.validate(cir.parse(H_CIRCUIT)) == []

    def test_paradigm_mismatch_reported_as_value(self):
        bad = cir.Circuit(
            cir.Register("qubit", 1),
            (),
            (cir.Instruction("S", (0,), (0.1, 0.0)),),
            cir.MeasureDirective("probabilities"),
        )
        problems = cir.validate(bad)
        assert len(problems) == 1
        assert "qumode register" in problems[0].reason

    def test_capacity_error(self):
        bad = cir.Circuit(
            cir.Register("qubit", 25), (), (), cir.MeasureDirective("probabilities")
        )
        assert any("capacity" in p.reason for p in cir.validate(bad))

    def test_interf_requires_all_wires_in_order(self):
        bad = cir.Circuit(
            cir.Register("qumode", 2, 3),
            (),
            (cir.Instruction("INTERF", (1, 0), (0.1, 0.2, 0.3, 0.4)),),
            cir.MeasureDirective("probabilities"),
        )
        assert any("ascending" in p.reason for p in cir.validate(bad))


class TestExecute:
    def test_kickback_probabilities(self):
        text = "register qubit 2\nX 1\nH 0\nCP 0 1 1.5707963267948966\nmeasure probabilities\n"
        result = cir.execute(cir.parse(text), 1)
        assert np.max(np.abs(np.array(result.values) - np.array([0.0, 0.5, 0.0, 0.5]))) < 1e-12

    def test_squeeze_zero_is_vacuum(self):
        text = "register qumode 1 cutoff 10\nprepare squeeze 0 0\nmeasure probabilities\n"
        result = cir.execute(cir.parse(text), 5)
        expected = np.zeros(10)
        expected[0] = 1.0
        assert np.array_equal(np.array(result.values), expected)

    def test_empty_instruction_list_expectation(self):
        text = "register qubit 3\nmeasure expectation pauliz\n"
        result = cir.execute(cir.parse(text), 2)
        assert result.values == (1.0, 1.0, 1.0)
        assert result.labels == ("0", "1", "2")

    def test_product_read_out(self):
        text = "register qubit 2\nmeasure expectation pauliz product\n"
        result = cir.execute(cir.parse(text), 2)
        assert result.labels == ("product",)
        assert result.values == (1.0,)

    def test_sample_labels_are_bit_strings(self):
        text = "register qubit 2\nX 0\nmeasure sample 50\n"
        result = cir.execute(cir.parse(text), 9)
        assert result.counts == {"10": 50}

    def test_sample_labels_are_occupation_tuples(self):
        text = "register qumode 2 cutoff 3\nmeasure sample 10\n"
        result = cir.execute(cir.parse(text), 9)
        assert result.counts == {"(0,0)": 10}

    def test_determinism_bit_identical(self):
        rng = np.random.default_rng(40)
        for _ in range(5):
            text = random_circuit_text(rng)
            assert cir.execute(cir.parse(text), 77) == cir.execute(cir.parse(text), 77)

    def test_interf_executes(self):
        text = (
            "register qumode 2 cutoff 4\n"
            "D 0 0.4 0.0\n"
            "INTERF 0 1 0.7853981633974483 0 0 0\n"
            "measure expectation number\n"
        )
        result = cir.execute(cir.parse(text), 1)
        assert abs(sum(result.values) - 0.16) < 1e-4  # photon number preserved by the mesh

    def test_interf_matches_direct_composition(self):
        base = "register qumode 2 cutoff 5\nprepare squeeze 1 0.3\n{}\nmeasure probabilities\n"
        via_interf = cir.execute(cir.parse(base.format("INTERF 0 1 0.6 -0.2 0.9 1.1")), 1)
        direct = cir.execute(
            cir.parse(base.format("BS 0 1 0.6 -0.2\nR 0 0.9\nR 1 1.1")), 1
        )
        assert np.max(np.abs(np.array(via_interf.values) - np.array(direct.values))) < 1e-12

    def test_validation_failure_raises(self):
        bad = cir.Circuit(
            cir.Register("qubit", 1),
            (),
            (cir.Instruction("H", (5,), ()),),
            cir.MeasureDirective("probabilities"),
        )
        with pytest.raises(cir.CircuitError):
            cir.execute(bad, 0)

    def test_matches_naive_full_matrix_reference(self):
        rng = np.random.default_rng(55)
        for _ in range(20):
            n_qubits = int(rng.integers(1, 7))
            gates = random_qubit_gates(rng, n_qubits, int(rng.integers(1, 21)))
            text = gates_to_text(n_qubits, gates, "measure probabilities")
            result = cir.execute(cir.parse(text), 0)
            reference = np.abs(naive_qubit_state(n_qubits, gates)) ** 2
            assert np.max(np.abs(np.array(result.values) - reference)) < 1e-10

    def test_shot_override_helper(self):
        parsed = cir.parse("register qubit 1\nH 0\nmeasure sample 10\n")
        assert cir.with_shots(parsed, 500).measure.shots == 500
        with pytest.raises(ValueError):
            cir.with_shots(cir.parse(H_CIRCUIT), 500)


class TestFuzz:
    def test_random_bytes_never_crash(self):
        rng = np.random.default_rng(99)
        for _ in range(1000):
            raw = bytes(rng.integers(0, 256, size=int(rng.integers(0, 200))))
            try:
                cir.parse(raw.decode("utf-8", errors="replace"))
            except cir.CircuitError:
                pass

    def test_token_soup_never_crashes(self):
        rng = np.random.default_rng(101)
        vocabulary = [
            "register", "qubit", "qumode", "cutoff", "prepare", "squeeze", "measure",
            "probabilities", "sample", "expectation", "variance", "number", "paulix",
            "product", "H", "X", "RX", "CNOT", "CP", "S", "R", "D", "BS", "INTERF",
            "0", "1", "2", "-1", "3.14", "1e999", "nan", "#", "é", "",
        ]
        for _ in range(500):
            n_lines = int(rng.integers(0, 8))
            lines = []
            for _ in range(n_lines):
                n_tokens = int(rng.integers(0, 7))
                lines.append(" ".join(vocabulary[rng.integers(len(vocabulary))] for _ in range(n_tokens)))
            try:
                cir.parse("\n".join(lines))
            except cir.CircuitError:
                pass
