"""
Auditing the hyperflower formulas
=================================

Each family has two predictors: one built from small reduced blocks and
quotient matrices, one from the printed closed-form polynomials.  The audit
compares both with the eigensolver and names any clause that disagrees.
"""

import numpy as np

from hypersub.partitions import check_equitable, containment_check
from hypersub.predictors import audit, predict_hyperflower
from hypersub.witnesses import hyperflower_witnesses, proof_partition

# a 4-hyperflower with 2 centers and 3 twins per petal, 5-uniform
pred = predict_hyperflower(4, 2, 3)
for piece in pred.pieces:
    print(piece.clause, np.round(piece.values, 6), "x", piece.multiplicity)

# eigenvectors behind each clause, checked against the real matrix
sub, fams = hyperflower_witnesses(4, 2, 3)
for fam in fams:
    if fam.vectors:
        print(f"{fam.name:20s} {fam.eigenvalue:+.6f}  residual {max(fam.residuals(sub.A)):.1e}")

# the partition {centers, twins, new vertices} is equitable
sub, P = proof_partition("t3", {"l": 4, "s": 2, "t": 3})
Q = check_equitable(sub.A, P)
print(Q.matrix, containment_check(Q, sub.A))

# the squid-like family: the structural flavor agrees, the printed cubic does not
for k in range(2, 7):
    res = audit("t6", {"k": k})
    print(k, res.deviations["structural_vs_oracle"], [r.piece for r in res.reports])
