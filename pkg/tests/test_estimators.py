from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from instabkit import KirwanStratifier, OptimalDestabilizer, State, ValidationError, parse_type

F = Fraction
A2_STATES = [
    [[1, 0], [-1, 1]],          # unstable, q = 1/6
    [[1, 0], [-1, 1], [0, -1]],  # full standard support
    [[0, -1]],
]


def test_params_and_clone():
    est = OptimalDestabilizer(root_type="A2", method="both")
    assert est.get_params() == {"root_type": "A2", "method": "both"}
    c = clone(est)
    assert c.get_params() == est.get_params() and c is not est
    k = KirwanStratifier(root_type="A1", character="adj").set_params(guard=100)
    assert clone(k).guard == 100


def test_destabilizer_outputs():
    est = OptimalDestabilizer(root_type="A2").fit()
    assert est.predict(A2_STATES).tolist() == [False, True, False]
    scores = est.score_samples(A2_STATES)
    assert scores.tolist() == [F(1, 6), 0, F(2, 3)]
    lam = est.fit_transform(A2_STATES)
    assert lam.shape == (3, 2)
    assert lam[0].tolist() == [0, 3]  # (0, 1/2) / (1/6)
    assert lam[1].tolist() == [0, 0]


def test_destabilizer_accepts_states_and_checks_ambient():
    a2 = parse_type("A2")
    est = OptimalDestabilizer(root_type="A2").fit()
    s = State(a2, [a2.weight([1, 0])])
    assert est.certificates(s)[0].q_value == F(2, 3)
    with pytest.raises(ValidationError):
        est.predict([State(parse_type("A1"), [parse_type("A1").weight([1])])])
    with pytest.raises(NotFittedError):
        OptimalDestabilizer().predict([[[1]]])
    with pytest.raises(ValidationError):
        OptimalDestabilizer(method="newton").fit()


def test_kirwan_stratifier():
    k = KirwanStratifier(root_type="A1", character="adj").fit()
    assert k.classes_ == [parse_type("A1").zero(), parse_type("A1").weight([2])]
    assert k.q_values_ == [0, 2]
    X = [[[2], [-2]], [[-2]], [[0], [2]]]
    assert k.predict(X).tolist() == [0, 1, 0]
    assert k.transform(X)[:, 0].tolist() == [0, 2, 0]
    with pytest.raises(ValidationError):
        k.predict([[[1]]])


def test_stratifier_agrees_with_destabilizer():
    k = KirwanStratifier(root_type="A2", character="std").fit()
    d = OptimalDestabilizer(root_type="A2").fit()
    assert np.array_equal(k.predict(A2_STATES) == 0, d.predict(A2_STATES))
