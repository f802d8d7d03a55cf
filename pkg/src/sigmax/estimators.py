"""scikit-learn compatible wrappers around the graph kernels."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import invariants
from .graph6 import write_graph6
from .transformations import hill_climb
from .validation import check_graphs

INDEX_FUNCTIONS = {
    "sigma": invariants.sigma,
    "albertson": invariants.albertson,
    "total_irregularity": invariants.total_irregularity,
    "first_zagreb": invariants.first_zagreb,
    "max_degree": invariants.max_degree,
    "order": lambda g: g.order,
    "size": lambda g: g.size,
}


class IrregularityIndexTransformer(TransformerMixin, BaseEstimator):
    """Map graphs to a matrix of integer irregularity indices.

    Parameters
    ----------
    indices : sequence of str, default=("sigma", "albertson", "total_irregularity", "first_zagreb")
        Columns to compute, in order. Any key of ``INDEX_FUNCTIONS``.

    Attributes
    ----------
    feature_names_out_ : ndarray of str
        The validated column names.
    """

    def __init__(self, indices=("sigma", "albertson", "total_irregularity", "first_zagreb")):
        self.indices = indices

    def fit(self, X, y=None):
        check_graphs(X)
        unknown = [name for name in self.indices if name not in INDEX_FUNCTIONS]
        if unknown or not self.indices:
            raise ValueError(f"unknown or empty indices: {unknown or self.indices!r}")
        self.feature_names_out_ = np.asarray(list(self.indices), dtype=object)
        self.n_features_out_ = len(self.indices)
        return self

    def transform(self, X):
        check_is_fitted(self, "feature_names_out_")
        graphs = check_graphs(X)
        fns = [INDEX_FUNCTIONS[name] for name in self.feature_names_out_]
        return np.array([[fn(g) for fn in fns] for g in graphs], dtype=np.int64)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_.copy()


class HillClimbTransformer(TransformerMixin, BaseEstimator):
    """Replace each connected graph by the end point of :func:`hill_climb`.

    The output is a 1-d object array of graph6 strings, or of traces when
    ``return_trace`` is set.
    """

    def __init__(self, return_trace: bool = False):
        self.return_trace = return_trace

    def fit(self, X, y=None):
        check_graphs(X, connected=True, min_order=2)
        self.fitted_ = True
        return self

    def transform(self, X):
        check_is_fitted(self, "fitted_")
        traces = [hill_climb(g) for g in check_graphs(X, connected=True, min_order=2)]
        if self.return_trace:
            return np.array(traces, dtype=object)
        return np.array([write_graph6(t.final_graph) for t in traces], dtype=object)
