import pytest

from rs_reencoding.bivariate import BiPoly, BivariateRing
from rs_reencoding.decoders import RSCode
from rs_reencoding.gf2m import Field
from rs_reencoding.polyring import PolyRing


@pytest.fixture
def gf8():
    return Field(3)


@pytest.fixture
def gf16():
    return Field(4)


@pytest.fixture
def ring8(gf8):
    return PolyRing(gf8)


@pytest.fixture
def bivariate8(ring8):
    return BivariateRing(ring8)


@pytest.fixture
def a(gf8):
    """alpha^e in GF(8)."""
    return gf8.exp


@pytest.fixture
def poly8(ring8):
    """Parse a low-to-high alpha-power literal such as ``[a5,a6]``."""
    return ring8.parse


@pytest.fixture
def bipoly8(ring8):
    def build(*columns):
        return BiPoly(ring8.parse(col) for col in columns)

    return build


@pytest.fixture
def rs72(gf8):
    return RSCode.primitive(gf8, 2)


@pytest.fixture
def rs15_3(gf16):
    return RSCode.primitive(gf16, 3)


@pytest.fixture
def sent_message(poly8):
    return poly8("[a5,a6]")


@pytest.fixture
def received_word(a):
    # a6 X + a5 sent, errors at positions 0 and 4
    return [a(5), a(4), a(6), a(3), a(3), 1, 0]


@pytest.fixture
def reference_s(bipoly8):
    return bipoly8("[a6,a2]", "[a3,a4,a6]")
