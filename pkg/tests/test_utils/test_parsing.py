import pytest

from stokes3d.exceptions import InputFormatError
from stokes3d.utils.parsing import parse_complex, parse_vector3


@pytest.mark.parametrize(
    "text, expected",
    [("1,0", 1 + 0j), ("0,1", 1j), (" -0.5 , 2e-3 ", complex(-0.5, 0.002))],
)
def test_parse_complex(text, expected):
    assert parse_complex(text) == expected


@pytest.mark.parametrize("text", ["1", "1,2,3", "a,b", "nan,0", ""])
def test_parse_complex_rejects(text):
    with pytest.raises(InputFormatError):
        parse_complex(text)


def test_parse_vector3():
    assert parse_vector3("2,0,-1.5") == (2.0, 0.0, -1.5)


@pytest.mark.parametrize("text", ["1,2", "1,2,x", "inf,0,0"])
def test_parse_vector3_rejects(text):
    with pytest.raises(InputFormatError):
        parse_vector3(text)


def test_input_format_error_is_a_value_error():
    with pytest.raises(ValueError):
        parse_vector3("1,2")
