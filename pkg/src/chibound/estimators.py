"""scikit-learn style wrappers.

A "sample" here is a whole graph. The colouring estimators treat the
vertices of one graph as the points to cluster, so ``fit(G).labels_`` is a
proper colouring; :class:`BettiTransformer` maps a sequence of graphs to a
feature matrix of graded Betti numbers.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .coloring import color, color_for_betti
from .family import FamilyIndex
from .homology import BettiIndex, _field, betti
from .validation import check_graph, check_graphs, check_positive_int


class _ColoringBase(ClusterMixin, BaseEstimator):
    def _store(self, result):
        self.result_ = result
        self.labels_ = np.asarray(result.colors, dtype=np.int64)
        self.n_colors_ = result.colors_used
        self.certified_bound_ = result.certified_bound
        self.bound_certified_ = result.bound_certified
        self.clique_trace_ = result.clique_trace
        self.omega_ = result.omega
        return self

    def predict(self, X):
        """Colour a fresh graph with the fitted parameters."""
        return self.fit(X).labels_


class CliqueColoring(_ColoringBase):
    """Colour a graph assumed ``B(n, d)``-free.

    Parameters
    ----------
    n, d : int
        Family index of the forbidden graphs.
    omega : int, optional
        Clique number to certify against; computed exactly for small graphs.
    check_free : bool
        Verify freeness exhaustively (small graphs only) so that
        ``bound_certified_`` can become true.
    """

    def __init__(self, n=4, d=1, omega=None, check_free=False):
        self.n = n
        self.d = d
        self.omega = omega
        self.check_free = check_free

    def fit(self, X, y=None):
        g = check_graph(X)
        idx = FamilyIndex(check_positive_int(self.n, "n", 2), check_positive_int(self.d, "d"))
        return self._store(color(g, idx, omega=self.omega, check_free=self.check_free))


class BettiColoring(_ColoringBase):
    """Colour a graph whose edge ideal has ``beta_{i,j} = 0``."""

    def __init__(self, i=1, j=4, omega=None, verify=None, field="q"):
        self.i = i
        self.j = j
        self.omega = omega
        self.verify = verify
        self.field = field

    def fit(self, X, y=None):
        g = check_graph(X)
        idx = BettiIndex(check_positive_int(self.i, "i"), check_positive_int(self.j, "j"))
        result = color_for_betti(
            g, idx, omega=self.omega, verify=self.verify, field=_field(self.field)
        )
        return self._store(result)


class BettiTransformer(TransformerMixin, BaseEstimator):
    """Map each graph to the Betti numbers ``beta_{i,j}`` at ``indices``.

    Stateless: ``fit`` only validates parameters.

    >>> from chibound import Graph
    >>> BettiTransformer(indices=[(0, 2), (1, 4)]).fit_transform([Graph.cycle(4)])
    array([[4, 0]])
    """

    def __init__(self, indices=((0, 2),), field="q", jobs=1):
        self.indices = indices
        self.field = field
        self.jobs = jobs

    def fit(self, X=None, y=None):
        self.indices_ = tuple(BettiIndex(int(i), int(j)) for i, j in self.indices)
        if not self.indices_:
            raise ValueError("indices must not be empty")
        self.field_ = _field(self.field)
        self.n_features_out_ = len(self.indices_)
        return self

    def transform(self, X):
        check_is_fitted(self, "indices_")
        graphs = check_graphs(X)
        out = np.zeros((len(graphs), len(self.indices_)), dtype=np.int64)
        for r, g in enumerate(graphs):
            for c, idx in enumerate(self.indices_):
                out[r, c] = betti(g, idx, self.field_, jobs=self.jobs)
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "indices_")
        return np.asarray([f"beta_{b.i}_{b.j}" for b in self.indices_], dtype=object)
