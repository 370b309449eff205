import random

import pytest

from coisostar import sampling, suites
from coisostar.errors import UnknownSuite
from coisostar.geometry import SpaceConfig, is_adapted_mv
from coisostar.hochschild import is_adapted_op


def test_samples_are_reproducible():
    config = SpaceConfig(3, 1)
    first = sampling.multivec(random.Random(5), config, 2, 2)
    second = sampling.multivec(random.Random(5), config, 2, 2)
    assert first == second


def test_adapted_samples():
    rng = random.Random(12)
    config = SpaceConfig(3, 2)
    for _ in range(20):
        assert is_adapted_mv(sampling.adapted_multivec(rng, config, rng.randint(0, 3), 2))
        assert is_adapted_op(sampling.adapted_operator(rng, config, rng.randint(0, 2), 2, 1))


def test_registered_suites():
    assert sorted(suites.SUITES) == [
        'adapted-closure', 'braces', 'cohomology', 'hkr', 'hochschild', 'koszul-bar', 'lie-interior',
        'obstruction', 'perturbation', 'schouten-jacobi', 'schouten-leibniz', 'star-products',
    ]


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        suites.run_suite('nope')


@pytest.mark.parametrize('name', ['schouten-jacobi', 'schouten-leibniz', 'lie-interior', 'hochschild',
                                  'adapted-closure', 'hkr', 'star-products'])
def test_fast_suites_pass(name):
    report = suites.run_suite(name, seed=7, cases=5)
    assert report['failures'] == []
    assert report['passed']
    assert report['suites'] == [name]


def test_report_is_deterministic():
    assert suites.run_suite('schouten-leibniz', 19, 4) == suites.run_suite('schouten-leibniz', 19, 4)


@pytest.mark.slow
@pytest.mark.parametrize('name', ['perturbation', 'cohomology'])
def test_slow_suites_pass(name):
    assert suites.run_suite(name, seed=7, cases=5)['passed']
