import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from sigmax import constructions as C
from sigmax.estimators import HillClimbTransformer, IrregularityIndexTransformer
from sigmax.graph import GraphError
from sigmax.validation import check_graph, check_graphs


def test_index_matrix():
    X = [C.path(3), "Cs", C.h_graph(5, 2)]
    out = IrregularityIndexTransformer().fit_transform(X)
    assert out.dtype == np.int64
    assert out.tolist() == [[2, 2, 2, 6], [12, 6, 6, 12], [20, 10, 14, 34]]


def test_params_and_clone():
    est = IrregularityIndexTransformer(indices=("sigma", "max_degree"))
    assert est.get_params() == {"indices": ("sigma", "max_degree")}
    twin = clone(est)
    assert twin.get_params() == est.get_params()
    twin.fit(["Bw"])
    assert list(twin.get_feature_names_out()) == ["sigma", "max_degree"]


def test_not_fitted_and_bad_indices():
    with pytest.raises(NotFittedError):
        IrregularityIndexTransformer().transform(["Bw"])
    with pytest.raises(ValueError):
        IrregularityIndexTransformer(indices=("nope",)).fit(["Bw"])


def test_in_pipeline():
    pipe = make_pipeline(IrregularityIndexTransformer(), StandardScaler())
    out = pipe.fit_transform([C.star(n) for n in range(3, 9)])
    assert out.shape == (6, 4)


def test_hill_climb_transformer():
    out = HillClimbTransformer().fit_transform([C.cycle(4), C.star(5)])
    assert out.tolist() == ["Ct", "Ds_"]
    traces = HillClimbTransformer(return_trace=True).fit_transform([C.cycle(6)])
    assert traces[0].final.max_degree == 5
    with pytest.raises(GraphError):
        HillClimbTransformer().fit(["CK"])


def test_validation_helpers():
    assert check_graph(b"Bw") == C.complete(3)
    with pytest.raises(TypeError):
        check_graph(3)
    with pytest.raises(TypeError):
        check_graphs("Bw")
    with pytest.raises(ValueError):
        check_graphs([])
    with pytest.raises(GraphError):
        check_graph("@", min_order=2)
