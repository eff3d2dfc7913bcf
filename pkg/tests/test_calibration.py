from flagsplit.action import PINNED_CONVENTION
from flagsplit.calibration import calibrate, score
from flagsplit.rootweyl import PINNED_LABELING


def test_calibration_reproduces_pinned_choices():
    result = calibrate()
    assert result["convention"] == PINNED_CONVENTION
    for t in ("C2", "G2"):
        assert result[t]["labeling"] == PINNED_LABELING[t]
        hits, total = result[t]["scores"][PINNED_LABELING[t]]
        assert hits == total


def test_alternatives_score_lower():
    assert score("A2", None, "inverse")[0] < score("A2", None, "direct")[0]
    assert score("G2", (1, 0), "direct")[0] < score("G2", (0, 1), "direct")[0]
    assert score("C2", (0, 1), "direct")[0] < score("C2", (1, 0), "direct")[0]
