from random import Random

import pytest

from slword import GF, QQ


@pytest.fixture
def rng():
    return Random(0xC0FFEE)


@pytest.fixture(params=["Q", "F11"], ids=["Q", "F11"])
def field(request):
    return QQ if request.param == "Q" else GF(11)
