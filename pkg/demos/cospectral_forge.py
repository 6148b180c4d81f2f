"""
Non-regular cospectral mates by subdivision
===========================================

The Shrikhande graph and the 4x4 rook's graph share a spectrum but are not
isomorphic.  Subdividing them (directly, or after taking a graph power)
gives non-regular hypergraphs with the same property.
"""

from hypersub import families as F
from hypersub.cospectral import power_subdivision_pair, subdivision_pair
from hypersub.hypergraph import is_regular

G1, G2 = F.shrikhande(), F.rook4x4()

cert = subdivision_pair(G1, G2)
print(cert.first.n, cert.first.m, "regular:", is_regular(cert.first))
print("max deviation", cert.max_deviation, "|", cert.verdict.value, f"({cert.search_nodes} nodes)")

# 3rd power first: 16 + 48 padding vertices, then 48 new ones = 112
cert = power_subdivision_pair(G1, G2, 3)
print(cert.first.n, cert.verdict.value, cert.extra)
