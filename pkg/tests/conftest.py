import pytest

from extremalcurves import PrimeField, QQ, curve_ring
from extremalcurves import groebner as _groebner

# every basis produced anywhere in the test run is re-checked against the
# Buchberger criterion
_groebner.VERIFY_PRODUCED_BASES = True


@pytest.fixture
def gf():
    return PrimeField()


@pytest.fixture
def ring(gf):
    return curve_ring(gf)


@pytest.fixture
def qring():
    return curve_ring(QQ)
