import random

import pytest

from grwin.bundles import (
    BundleLabel,
    GradedComplex,
    StackParams,
    complex_from_json,
    complex_to_json,
    dumps,
    from_nondual,
    label_from_json,
    label_to_json,
    normalize,
    rank,
    relabel_to_x,
    to_nondual,
)
from grwin.partitions import partitions_in_box
from grwin.schur import schur_dimension


def test_normalize_folds_full_column():
    lb = normalize((1, 1), 0, 2)
    assert lb == BundleLabel((), 2, 1)


def test_normalize_repeated_fold():
    assert normalize((3, 1), -1, 2) == BundleLabel((2,), 2, 0)
    assert normalize((2, 2), -1, 2) == BundleLabel((), 2, 1)


def test_normalize_rejects_vanishing():
    with pytest.raises(ValueError):
        normalize((1, 1, 1), 0, 2)


def test_normalize_idempotent_and_rank_preserving():
    rng = random.Random(59)
    params = StackParams(5, 3)
    for _ in range(500):
        r = rng.randint(1, 3)
        schur = rng.choice(partitions_in_box(4, r))
        twist = rng.randint(-3, 3)
        lb = normalize(schur, twist, r)
        assert normalize(lb.schur, lb.det_twist, lb.taut_rank) == lb
        assert schur_dimension(lb.schur, r) == schur_dimension(schur, r)
        assert rank(lb, params) == schur_dimension(schur, r)


def test_dual_conversion_example():
    lb = from_nondual((2, 1), 2)
    assert lb == BundleLabel((1,), 2, -2)
    # ranks agree on both presentations
    assert schur_dimension((2, 1), 2) == schur_dimension((1,), 2) == 2


def test_dual_conversion_round_trip():
    from grwin.partitions import width
    for gamma in partitions_in_box(3, 3):
        lb = from_nondual(gamma, 3)
        back, leftover = to_nondual(lb, width(gamma))
        assert (back, leftover) == (gamma, 0)


def test_rank_examples():
    params = StackParams(4, 2)
    assert rank(BundleLabel((1,), 2, 0, v_shape=(1, 1, 1)), params) == 8
    assert rank(BundleLabel((), 2, 5), params) == 1
    assert rank(BundleLabel((2,), 2, -1), params) == 3


def test_relabel_to_x():
    assert relabel_to_x(BundleLabel((1,), 2, -1, side="H")) == \
        BundleLabel((1,), 2, -1, side="S")
    assert relabel_to_x(BundleLabel((), 2, 0, side="H")) == BundleLabel((), 2, 0)
    assert relabel_to_x(normalize((2, 2), -1, 2, side="H")) == \
        BundleLabel((), 2, 1, side="S")
    with pytest.raises(ValueError):
        relabel_to_x(BundleLabel((), 2, 0, side="S"))


def test_graded_complex_insertion_order_invariance():
    a = GradedComplex.from_items([
        (0, BundleLabel((1,), 2, 0), 1),
        (1, BundleLabel((), 2, 0), 2),
        (0, BundleLabel((1,), 2, 0), 1),
    ])
    b = GradedComplex.from_items([
        (1, BundleLabel((), 2, 0), 1),
        (0, BundleLabel((1,), 2, 0), 2),
        (1, BundleLabel((), 2, 0), 1),
    ])
    assert a == b
    assert a.at(0)[BundleLabel((1,), 2, 0)] == 2


def test_graded_complex_rejects_mixed_ranks():
    with pytest.raises(ValueError):
        GradedComplex.from_items([
            (0, BundleLabel((), 2, 0), 1),
            (0, BundleLabel((), 3, 0), 1),
        ])


def test_graded_complex_drops_empty_degrees():
    cx = GradedComplex.from_items([(0, BundleLabel((), 2, 0), 1),
                                   (5, BundleLabel((), 2, 1), 0)])
    assert cx.degrees() == [0]


def test_label_json_round_trip():
    lb = BundleLabel((2, 1), 3, -1, side="H", v_shape=(1, 1))
    assert label_from_json(label_to_json(lb)) == lb
    zlabel = BundleLabel((1,), 2, -2, bracket_twist=1, v_shape=(1,))
    assert label_from_json(label_to_json(zlabel)) == zlabel


def test_complex_json_round_trip_is_bit_exact():
    cx = GradedComplex.from_items([
        (0, BundleLabel((1,), 2, 1, v_shape=(1, 1, 1)), 1),
        (1, BundleLabel((), 2, 1, v_shape=(1, 1)), 1),
        (2, BundleLabel((), 2, 0), 1),
    ])
    doc = complex_to_json(cx)
    text = dumps(doc)
    assert complex_from_json(doc) == cx
    assert dumps(complex_to_json(complex_from_json(doc))) == text


def test_tensor_det_and_shift():
    cx = GradedComplex.from_items([(0, BundleLabel((1,), 2, 0), 1)])
    assert cx.tensor_det(2).at(0) == {BundleLabel((1,), 2, 2): 1}
    assert cx.shift(1).degrees() == [-1]


def test_expand_multiplicities():
    cx = GradedComplex.from_items([
        (0, BundleLabel((1,), 2, 0, v_shape=(1, 1, 1)), 1),
        (1, BundleLabel((), 2, 0), 1),
    ])
    flat = cx.expand_multiplicities(4)
    assert flat.at(0) == {BundleLabel((1,), 2, 0): 4}
    assert flat.at(1) == {BundleLabel((), 2, 0): 1}


def test_stack_params():
    assert StackParams(4, 2).sigma == 5
    with pytest.raises(ValueError):
        StackParams(2, 3)
