import json
import math

import numpy as np
import pytest

from sloccinv import (
    PureState,
    SeededGenerator,
    StateFormatError,
    parse_state,
    random_state,
    serialize_state,
    state_norm,
)
from sloccinv.partition import build_coeff_matrix, parse_partition

from conftest import make_state


def test_parse_basis_state():
    s = parse_state('{"n":1,"amplitudes":[[1,0],[0,0]]}')
    assert s.n == 1
    assert s.amps[0] == 1.0 + 0.0j
    assert s.amps[1] == 0.0


def test_parse_ghz3_document():
    amp = 0.7071067811865476
    rows = [[0.0, 0.0]] * 8
    rows[0] = rows[7] = [amp, 0.0]
    s = parse_state(json.dumps({"n": 3, "amplitudes": rows}))
    assert s.n == 3
    assert s.amps[0] == amp
    assert s.amps[7] == amp
    assert np.count_nonzero(s.amps) == 2


def test_parse_rejects_malformed_document():
    with pytest.raises(StateFormatError, match="malformed"):
        parse_state("{this is not json")
    with pytest.raises(StateFormatError):
        parse_state("[1, 2, 3]")
    with pytest.raises(StateFormatError):
        parse_state('{"n": 2}')


def test_parse_rejects_length_not_power_of_two():
    rows = [[1.0, 0.0]] * 6
    with pytest.raises(StateFormatError, match="not a power of two"):
        parse_state(json.dumps({"n": 3, "amplitudes": rows}))


def test_parse_rejects_length_mismatch():
    rows = [[1.0, 0.0]] * 4
    with pytest.raises(StateFormatError, match="does not match"):
        parse_state(json.dumps({"n": 3, "amplitudes": rows}))


def test_parse_rejects_non_finite():
    text = '{"n": 1, "amplitudes": [[1, 0], [Infinity, 0]]}'
    with pytest.raises(StateFormatError, match="finite"):
        parse_state(text)
    text = '{"n": 1, "amplitudes": [[1, 0], [NaN, 0]]}'
    with pytest.raises(StateFormatError, match="finite"):
        parse_state(text)


def test_parse_rejects_zero_vector():
    rows = [[0.0, 0.0]] * 4
    with pytest.raises(StateFormatError, match="zero"):
        parse_state(json.dumps({"n": 2, "amplitudes": rows}))


def test_parse_rejects_bad_n():
    with pytest.raises(StateFormatError, match='"n"'):
        parse_state('{"n": "3", "amplitudes": [[1,0],[0,0]]}')
    rows = [[1.0, 0.0]] * 2048
    with pytest.raises(StateFormatError, match="1..10"):
        parse_state(json.dumps({"n": 11, "amplitudes": rows}))


def test_parse_rejects_bad_amplitude_entry():
    with pytest.raises(StateFormatError, match="pair"):
        parse_state('{"n": 1, "amplitudes": [[1, 0], [1]]}')
    with pytest.raises(StateFormatError, match="pair"):
        parse_state('{"n": 1, "amplitudes": [[1, 0], ["a", 0]]}')


def test_serialize_basis_state():
    s = parse_state('{"n":1,"amplitudes":[[1,0],[0,0]]}')
    doc = json.loads(serialize_state(s))
    assert doc == {"n": 1, "amplitudes": [[1.0, 0.0], [0.0, 0.0]]}


def test_round_trip_is_bit_exact_on_random_states():
    gen = SeededGenerator(2024)
    for n in (1, 2, 3, 4, 6):
        s = random_state(n, gen)
        again = parse_state(serialize_state(s))
        assert again.n == s.n
        assert again.amps.tobytes() == s.amps.tobytes()


def test_round_trip_w3():
    amps = np.zeros(8, dtype=np.complex128)
    amps[1] = amps[2] = amps[4] = 3**-0.5
    s = PureState(3, amps)
    assert parse_state(serialize_state(s)) == s


def test_serialize_of_parse_is_identity_on_canonical_documents():
    gen = SeededGenerator(99)
    s = random_state(3, gen)
    doc = serialize_state(s)
    assert serialize_state(parse_state(doc)) == doc


def test_state_norm_examples():
    basis = make_state([1, 0, 0, 0, 0, 0, 0, 0])
    assert state_norm(basis) == 1.0
    ones = make_state(np.ones(8))
    assert abs(state_norm(ones) - math.sqrt(8)) < 1e-12
    ghz4 = np.zeros(16, dtype=np.complex128)
    ghz4[0] = ghz4[15] = 2**-0.5
    assert abs(state_norm(PureState(4, ghz4)) - 1.0) < 1e-15


def test_index_convention_q1_is_most_significant():
    # amps[1] of a 2-qubit state belongs to |01> (qubit 2 set, qubit 1 clear)
    s = make_state([0, 1, 0, 0])
    c = build_coeff_matrix(s, parse_partition("2|1", 2))
    # row index is qubit 2, column index is qubit 1
    assert c.entries[1, 0] == 1.0
    assert np.count_nonzero(c.entries) == 1


def test_pure_state_validation():
    with pytest.raises(ValueError, match="zero"):
        PureState(2, np.zeros(4))
    with pytest.raises(ValueError, match="expected"):
        PureState(2, np.ones(8))
    with pytest.raises(ValueError, match="finite"):
        PureState(1, np.array([np.nan, 1.0]))
    with pytest.raises(ValueError, match="1..10"):
        PureState(11, np.ones(2048))
    with pytest.raises(ValueError, match="integer"):
        PureState(True, np.ones(2))


def test_pure_state_is_immutable():
    s = make_state([1, 0])
    with pytest.raises(ValueError):
        s.amps[0] = 2.0


def test_pure_state_equality():
    a = make_state([1, 0, 0, 1])
    b = make_state([1, 0, 0, 1])
    c = make_state([1, 0, 1, 0])
    assert a == b
    assert a != c
    assert a != "not a state"
