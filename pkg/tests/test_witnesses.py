import numpy as np
import pytest

from hypersub.predictors import predict
from hypersub.witnesses import proof_partition, witnesses

POINTS = [
    ("t3", {"l": 4, "s": 2, "t": 3}),
    ("t3", {"l": 1, "s": 3, "t": 1}),
    ("t4", {"l": 5, "k": 4}),
    ("t5", {"l": 3, "s": 1, "t": 1}),
    ("t5", {"l": 6, "s": 2, "t": 3}),
    ("t6", {"k": 2}),
    ("t6", {"k": 5}),
]


@pytest.mark.parametrize("theorem, params", POINTS)
def test_residuals(theorem, params):
    sub, fams = witnesses(theorem, params)
    for fam in fams:
        assert max(fam.residuals(sub.A), default=0.0) <= 1e-10, fam.name


@pytest.mark.parametrize("theorem, params", POINTS)
def test_witnesses_span_the_prediction(theorem, params):
    """Witness vectors are independent and their eigenvalues are predicted."""
    sub, fams = witnesses(theorem, params)
    vecs = np.array([x for fam in fams for x in fam.vectors])
    assert np.linalg.matrix_rank(vecs, tol=1e-8) == len(vecs)
    pred = np.array(predict(theorem, params).values)
    for fam in fams:
        if fam.vectors:
            assert np.min(np.abs(pred - fam.eigenvalue)) < 1e-8


@pytest.mark.parametrize("theorem, params", POINTS)
def test_partition_cells_in_label_groups(theorem, params):
    sub, P = proof_partition(theorem, params)
    assert P.order == sub.S.n
    for cell in P.cells:
        prefixes = {sub.S.label(v)[0] for v in cell}
        assert len(prefixes) == 1
