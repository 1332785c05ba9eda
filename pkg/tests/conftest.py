"""
Shared fields, codes and decoders
"""

import numpy as np
import pytest

from pdrm.codes import ReedMullerCode, position_elements
from pdrm.decoder import PermutationDecoder
from pdrm.field import cached_field


@pytest.fixture(scope="session")
def gf16():
    return cached_field(4)


@pytest.fixture(scope="session")
def gf64():
    return cached_field(6)


@pytest.fixture(scope="session")
def code4(gf16):
    return ReedMullerCode(gf16)


@pytest.fixture(scope="session")
def decoder4(gf16):
    return PermutationDecoder(gf16)


@pytest.fixture(scope="session")
def decoder6(gf64):
    return PermutationDecoder(gf64)


@pytest.fixture
def bent4(gf16):
    """x0 x1 + x2 x3 evaluated at every position: distance 6 from all of R(1, 4)"""
    x = (position_elements(gf16)[:, None] >> np.arange(4)[None, :]) & 1
    return ((x[:, 0] & x[:, 1]) ^ (x[:, 2] & x[:, 3])).astype(np.uint8)
