import pytest

from gelfand import presets


@pytest.fixture(scope="session")
def s3():
    return presets.symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    return presets.symmetric_group(4)


@pytest.fixture(scope="session")
def s5():
    return presets.symmetric_group(5)


@pytest.fixture(scope="session")
def s2n_bn_2():
    return presets.s2n_bn_pair(2)


@pytest.fixture(scope="session")
def s2n_bn_3():
    return presets.s2n_bn_pair(3)


@pytest.fixture(scope="session")
def gxgopp_s3(s3):
    return presets.gxgopp_pair(s3)


@pytest.fixture(scope="session")
def gxgopp_s4(s4):
    return presets.gxgopp_pair(s4)


@pytest.fixture(scope="session")
def sn_sn1_4():
    return presets.sn_sn1_pair(4)
