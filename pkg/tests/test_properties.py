import pytest

from property_suites import SUITES


@pytest.mark.parametrize("name,check", SUITES, ids=[name.replace(" ", "_") for name, _ in SUITES])
def test_property_suite(name, check):
    check()
