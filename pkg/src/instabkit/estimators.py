"""scikit-learn style front ends for the instability computations.

The estimators accept a sequence of states (each a list of weights given as
:class:`~instabkit.roots.Weight` objects or plain Dynkin-label lists) and
return exact results in numpy object arrays of Fractions.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .expr import parse_character
from .instability import (
    METHODS,
    State,
    kirwan_index_set,
    nearest_point,
    optimal_destabilizer,
)
from .roots import RootSystem, Weight, parse_type
from .validation import ValidationError, check_vector


def check_states(X, rs: RootSystem) -> list[State]:
    """Coerce ``X`` into a list of states over ``rs``."""
    if isinstance(X, State):
        X = [X]
    out = []
    for item in X:
        if isinstance(item, State):
            if item.ambient != rs:
                raise ValidationError("state ambient does not match the estimator", "ambient_match")
            out.append(item)
            continue
        weights = []
        for w in item:
            weights.append(w if isinstance(w, Weight) else Weight(check_vector(w, rs.rank, "weight")))
        out.append(State(rs, weights))
    return out


def _check_method(method: str) -> None:
    if method not in METHODS:
        raise ValidationError(f"unknown method {method!r}; expected one of {METHODS}", "method")


def _rows(weights, rank: int) -> np.ndarray:
    arr = np.empty((len(weights), rank), dtype=object)
    for i, w in enumerate(weights):
        arr[i, :] = list(w.coords)
    return arr


class OptimalDestabilizer(TransformerMixin, BaseEstimator):
    """Torus-optimal destabilizing direction of each state.

    ``transform`` returns ``lambda / q(lambda)`` in Dynkin coordinates, with a
    zero row for semistable states. ``predict`` returns the semistability flags.
    """

    def __init__(self, root_type: str = "A1", method: str = "wolfe"):
        self.root_type = root_type
        self.method = method

    def fit(self, X=None, y=None):
        _check_method(self.method)
        self.root_system_ = parse_type(self.root_type)
        if X is not None:
            check_states(X, self.root_system_)
        return self

    def certificates(self, X):
        check_is_fitted(self, "root_system_")
        return [optimal_destabilizer(s, self.method) for s in check_states(X, self.root_system_)]

    def transform(self, X):
        certs = self.certificates(X)
        rs = self.root_system_
        return _rows([c.lam_normalized if c else rs.zero() for c in certs], rs.rank)

    def predict(self, X) -> np.ndarray:
        return np.array([c is None for c in self.certificates(X)], dtype=bool)

    def score_samples(self, X) -> np.ndarray:
        """``q(lambda)`` per state (0 for semistable states), as Fractions."""
        return np.array([c.q_value if c else Fraction(0) for c in self.certificates(X)],
                        dtype=object)


class KirwanStratifier(ClassifierMixin, BaseEstimator):
    """Assign states to the strata of a representation.

    ``fit`` enumerates the index set of the character; ``classes_`` holds the
    dominant indices ``beta`` (with ``beta = 0`` first) and ``predict`` returns
    the position of each state's stratum in ``classes_``.
    """

    def __init__(self, root_type: str = "A1", character: str = "std",
                 method: str = "wolfe", guard: int | None = None):
        self.root_type = root_type
        self.character = character
        self.method = method
        self.guard = guard

    def fit(self, X=None, y=None):
        _check_method(self.method)
        self.root_system_ = parse_type(self.root_type)
        self.character_ = parse_character(self.character, self.root_system_)
        self.index_set_ = kirwan_index_set(self.character_, self.guard, self.method)
        self.classes_ = list(self.index_set_)
        self.q_values_ = [q for _, q in self.index_set_.betas]
        return self

    def _betas(self, X) -> list[Weight]:
        check_is_fitted(self, "index_set_")
        rs = self.root_system_
        support = set(self.character_.support)
        out = []
        for s in check_states(X, rs):
            if not s.weights <= support:
                raise ValidationError("state is not contained in the character's support",
                                      "state_in_support")
            beta, _ = rs.dominant_representative(nearest_point(rs, s.weights, self.method))
            out.append(beta)
        return out

    def predict(self, X) -> np.ndarray:
        return np.array([self.classes_.index(b) for b in self._betas(X)], dtype=int)

    def transform(self, X) -> np.ndarray:
        """Stratum indices ``beta`` in Dynkin coordinates, one row per state."""
        return _rows(self._betas(X), self.root_system_.rank)
