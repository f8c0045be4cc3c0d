import math
import os

import pytest

import mvfp


def fixture(name):
    return os.path.join(os.environ["MVFP_FIXTURES"], name)


def halving_problem():
    return mvfp.load_problem(fixture("halving.prob"))


def test_verify_halving_fixture():
    report = halving_problem().verify()
    assert report["passed"]
    assert report["pairs_checked"] == 16
    # The certificate holds with equality on its worst pairs.
    assert report["worst_margin"] == 0.0


def test_sampled_verification():
    report = halving_problem().verify(sample_pairs=10)
    assert report["passed"]
    assert report["pairs_checked"] == 10


def test_solve_trace():
    trace = halving_problem().solve(x0=4)
    assert trace["terminated"] == "converged"
    assert trace["labels"] == [4.0, 2.0, 1.0, 0.0]
    assert trace["step_gaps"] == [4.0, 2.0, 1.0]
    assert math.isnan(trace["alphas"][0])
    assert trace["alphas"][1:] == [0.5, 0.5]


def test_endpoint():
    result = halving_problem().endpoint()
    assert result["endpoint"] == 0.0
    assert result["unique"]
    assert result["final_gap"] == 0.0
    assert result["tail_alpha"] == 0.5


def test_no_endpoint_on_swap_fixture():
    result = mvfp.load_problem(fixture("shift2.prob")).endpoint()
    assert result["endpoint"] is None
    assert result["final_gap"] == 1.0


def test_certificate_error_surfaces():
    problem = mvfp.parse_problem(
        "[space]\nmode = finite-matrix\ncoords = 0 1\n\n"
        "[map S]\nfamily = identity\n\n[map T]\nsame = S\n\n"
        "[contraction]\nkind = alpha-const\nalpha = 1.25\n"
    )
    with pytest.raises(mvfp.CertificateError):
        problem.verify()


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        mvfp.parse_problem("not a problem file")


def test_hausdorff_and_enumeration():
    space = mvfp.MetricSpace.from_coordinates([0.0, 1.0, 2.0, 4.0])
    assert mvfp.hausdorff(space, [0, 1], [1, 2]) == 1.0
    halving = mvfp.MultiMap(4, [[0], [0], [1], [2]])
    assert mvfp.enumerate_fixed_points(space, halving) == [0.0]
    assert mvfp.enumerate_endpoints(space, halving) == [0.0]


def test_bounds_and_schedule():
    assert mvfp.cauchy_bound(0.75, 1, 1) == 18.0
    assert mvfp.cauchy_bound(0.5, 2, 3) == 1.875
    assert mvfp.epsilon_schedule(3, 0.5, 1.0) == 0.125
    assert mvfp.check_recurrence([4.0, 2.0, 1.0], 0.5)


def test_generate_instance_round_trip():
    inst = mvfp.generate_instance(seed=7, n=5, family="constructive")
    assert inst is not None
    anchor_label = inst["space"].label(inst["anchor"])
    assert mvfp.enumerate_endpoints(inst["space"], inst["s"]) == [anchor_label]
    assert mvfp.enumerate_fixed_points(inst["space"], inst["t"]) == [anchor_label]


def test_render_parse_round_trip():
    problem = halving_problem()
    again = mvfp.parse_problem(problem.render())
    assert again == problem
