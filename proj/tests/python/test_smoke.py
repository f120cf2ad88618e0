import math

import pytest

import szilard


def test_spectrum_basics():
    assert szilard.left_level(1, 0.5) == pytest.approx(4.0)
    assert szilard.right_level(2, 1 / 3) == pytest.approx(9.0)
    assert szilard.e_sym(0.5) == 0.0
    assert szilard.delta_e(0.5) == pytest.approx(12.0)
    with pytest.raises(Exception):
        szilard.left_level(0, 0.5)


def test_delta_wall():
    levels = szilard.delta_wall_levels(0.0, 4)
    assert levels == pytest.approx([1.0, 4.0, 9.0, 16.0])
    assert szilard.doublet_splitting(1e6) < 1e-3
    assert szilard.doublet_mixture_equivalence(100.0) <= 1e-14


def test_single_atom_ln2():
    spec = szilard.EnsembleSpec(stats="boson0", particles=1)
    point = szilard.entropy_production(spec, r=0.5, t=1.0)
    assert point.ds == pytest.approx(math.log(2), abs=1e-9)
    assert point.work == point.t * point.ds
    assert point.p_star == [1.0, 1.0]


def test_residual_entropies():
    bosons = szilard.EnsembleSpec(stats="boson0", particles=2)
    assert szilard.entropy_production(bosons, 0.5, 1e-3).ds == pytest.approx(
        2 / 3 * math.log(3), abs=1e-6
    )
    spin = szilard.EnsembleSpec(stats="fermion-spin-half", particles=2)
    assert szilard.entropy_production(spin, 0.5, 1e-3).ds == pytest.approx(
        math.log(6) / 3, abs=1e-6
    )
    assert szilard.occupancy_probabilities(spin, 0.5, 1e-3) == pytest.approx(
        [1 / 6, 4 / 6, 1 / 6], abs=1e-9
    )


def test_invalid_combination_raises():
    with pytest.raises(Exception, match="spin-spin"):
        szilard.EnsembleSpec(stats="boson0", interaction="spin:-1", particles=2)


def test_sweep_and_collapse():
    spec = szilard.EnsembleSpec(stats="boson0", particles=1)
    grid = szilard.log_spaced(0.5 * szilard.e_sym(0.4), 5 * szilard.e_sym(0.4), 9)
    sweep = szilard.collapse_transform(szilard.temp_sweep(spec, 0.4, grid))
    assert sweep.errors == 0
    assert len(sweep.ds) == 9
    assert sweep.scaled_ds[-1] > 0.8


def test_find_r_star():
    r_star, r_deg = szilard.find_r_star(-1.0, 0.05)
    assert r_deg == pytest.approx(0.46899, abs=1e-4)
    assert r_star < r_deg


def test_classical_engine():
    point = szilard.classical_engine("none", 0.3, 1.0, particles=1)
    assert point.ds == pytest.approx(szilard.classical_binary_entropy(0.3), abs=1e-12)


def test_wall_demo_check_passes():
    results = szilard.verify([11])
    assert len(results) == 1
    assert results[0][2] is True
