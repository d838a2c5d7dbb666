import pytest

from coxkit.fanfile import FanFileError, format_fan, parse_fan_file, parse_fan_text, write_fan_file
from coxkit.fixtures import FIXTURE_NAMES, fixture

P2_TEXT = """# projective plane
dim 2
rays 3
1 0
0 1
-1 -1
cones 3
1 2
2 3
1 3
"""


def test_parse_p2(tmp_path):
    path = tmp_path / "p2.fan"
    path.write_text(P2_TEXT)
    fan = parse_fan_file(path)
    assert fan == fixture("p2")
    assert fan.name == "p2"


def test_non_primitive_ray():
    with pytest.raises(FanFileError, match="ray 1 not primitive"):
        parse_fan_text(P2_TEXT.replace("1 0\n0 1", "2 0\n0 1"))


@pytest.mark.parametrize(
    "text,lineno",
    [
        ("dim 2\nrays 3\n1 0\n0 1 5\n-1 -1\ncones 0\n", 4),
        ("dim 2\nrays x\n", 2),
        ("dim 2\nrays 1\n1 0\ncones 1\n1 2\n", 5),
        ("dim 2\nrays 1\n1 a\n", 3),
        ("dim 2\nrays 1\n1 0\ncones 1\n1\nextra\n", 6),
    ],
)
def test_syntax_errors_carry_line_numbers(text, lineno):
    with pytest.raises(FanFileError) as info:
        parse_fan_text(text)
    assert info.value.lineno == lineno


def test_truncated_file():
    with pytest.raises(FanFileError, match="file ended"):
        parse_fan_text("dim 2\nrays 3\n1 0\n")


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_roundtrip(name, tmp_path):
    fan = fixture(name)
    assert parse_fan_text(format_fan(fan), validate=False) == fan
    write_fan_file(fan, tmp_path / (name + ".fan"))
    assert parse_fan_file(tmp_path / (name + ".fan"), validate=False) == fan
