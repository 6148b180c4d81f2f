"""
Spectra of subdivided hypergraphs
=================================

Subdivide a few uniform hypergraphs and compare the eigenvalues predicted
from the input spectrum with a direct eigensolver run.
"""

import numpy as np

from hypersub import families as F
from hypersub.hypergraph import adjacency_matrix
from hypersub.predictors import predict
from hypersub.spectra import eigenvalues, multiset_equal
from hypersub.subdivision import subdivide

# a single triple: 3 vertices, 1 edge; subdividing adds p_1 and 3 edges
triple = F.single_edge(3)
res = subdivide(triple)
print(res.hypergraph.edges)

# the prediction only needs the codegree spectrum of the input
# (two zero roots cancel because m < n)
pred = predict("t1", base=triple, flavor="closed")
print(np.round(pred.values, 6))
print(np.round(eigenvalues(adjacency_matrix(res.hypergraph)).values, 6))

# the Fano plane is 3-regular and linear, 14 eigenvalues after subdividing
fano = F.fano_plane()
S = subdivide(fano).hypergraph
print(eigenvalues(adjacency_matrix(S)).grouped)

# graph powers: pad each edge of the Petersen graph to size 5
for k in (3, 4, 5):
    H = F.power_of_graph(F.petersen(), k)
    oracle = eigenvalues(adjacency_matrix(subdivide(H).hypergraph))
    ok, dev = multiset_equal(predict("t2", {"k": k}, F.petersen()).values, oracle, 1e-6)
    print(f"Petersen^{k}: {len(oracle)} eigenvalues, agree={ok}, deviation {dev:.1e}")
