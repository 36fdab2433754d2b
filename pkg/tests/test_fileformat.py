"""Tests for frame file parsing, emission, and the line-numbered errors."""

import pytest

from groupra.builders import build_cyclic_frame, build_power_frame, merge_frames
from groupra.errors import FrameFormatError
from groupra.fileformat import emit_frame, parse_frame
from groupra.groups import make_cyclic, validate_table

KLEIN = [
    [0, 1, 2, 3],
    [1, 0, 3, 2],
    [2, 3, 0, 1],
    [3, 2, 1, 0],
]

Z6Z9 = """\
group 0 cyclic 6
group 1 cyclic 9
block 0 1
iso 0 1
H 0 3
K 0 3 6
map 0:0 1:1 2:2
end
"""


def lines(*rows: str) -> str:
    return "\n".join(rows) + "\n"


def expect_error(text: str, line: int, fragment: str) -> None:
    with pytest.raises(FrameFormatError) as info:
        parse_frame(text)
    assert info.value.line == line, str(info.value)
    assert fragment in info.value.reason, str(info.value)


def test_parse_canonical_running_file():
    frame = parse_frame(Z6Z9)
    assert frame == build_cyclic_frame([6, 9], {(0, 1): 3})


def test_emit_is_parse_inverse_and_fixed_point():
    frame = build_cyclic_frame([6, 9], {(0, 1): 3})
    text = emit_frame(frame)
    assert text == Z6Z9
    again = parse_frame(text)
    assert again == frame
    assert emit_frame(again) == text


def test_parse_tolerates_comments_and_spacing():
    text = lines(
        "# a frame with remarks",
        "group 0 cyclic 6   # the small group",
        "",
        "group 1 cyclic 9",
        "block   0   1",
        "iso 0 1",
        "  H 0 3",
        "K 0 3 6  # image side",
        "map 0:0 1:1 2:2",
        "end",
    )
    assert parse_frame(text) == build_cyclic_frame([6, 9], {(0, 1): 3})


def test_parse_accepts_any_coset_representatives():
    text = lines(
        "group 0 cyclic 6",
        "group 1 cyclic 9",
        "block 0 1",
        "iso 0 1",
        "H 3 0",
        "K 6 0 3",
        "map 3:6 4:1 5:8",
        "end",
    )
    assert parse_frame(text) == build_cyclic_frame([6, 9], {(0, 1): 3})


def test_parse_accepts_automorphism_pairings():
    # map gamma -> 2*gamma: a different but perfectly good isomorphism
    text = lines(
        "group 0 cyclic 6",
        "group 1 cyclic 9",
        "block 0 1",
        "iso 0 1",
        "H 0 3",
        "K 0 3 6",
        "map 0:0 1:2 2:1",
        "end",
    )
    frame = parse_frame(text)
    assert frame != build_cyclic_frame([6, 9], {(0, 1): 3})
    record = frame.isos[("0", "1")]
    from groupra.groups import elements

    assert [elements(c) for c in record.k.cosets] == [[0, 3, 6], [2, 5, 8], [1, 4, 7]]


def test_round_trip_table_group():
    g = validate_table(KLEIN, label="V4")
    frame = build_power_frame(g, 1, ["0", "1"])
    text = emit_frame(frame)
    assert "group 0 table 4" in text
    again = parse_frame(text)
    assert again == frame
    assert emit_frame(again) == text


def test_round_trip_multiblock():
    frame = merge_frames(
        [build_cyclic_frame([6, 9], {(0, 1): 3}), build_power_frame(make_cyclic(2), 1, ["a"])]
    )
    text = emit_frame(frame)
    assert parse_frame(text) == frame
    assert emit_frame(parse_frame(text)) == text


def test_emit_shape():
    text = emit_frame(build_cyclic_frame([6, 9], {(0, 1): 3}))
    assert text.endswith("\n")
    assert not any(line != line.rstrip() for line in text.splitlines())


def test_error_unknown_directive():
    expect_error(lines("flock 0"), 1, "unknown directive 'flock'")


def test_error_group_arity():
    expect_error(lines("group 0 cyclic"), 1, "expected 'group <id> cyclic|table <n>'")
    expect_error(lines("group 0 ring 4"), 1, "expected 'group <id> cyclic|table <n>'")


def test_error_duplicate_group():
    expect_error(
        lines("group 0 cyclic 2", "group 0 cyclic 3"), 2, "duplicate group id '0'"
    )


def test_error_group_order_not_integer():
    expect_error(lines("group 0 cyclic six"), 1, "group order must be an integer")


def test_error_group_order_not_positive():
    expect_error(lines("group 0 cyclic 0"), 1, "must be positive")


def test_error_table_row_length():
    expect_error(
        lines("group 0 table 2", "0 1", "1"), 3, "table row has 1 entries, expected 2"
    )


def test_error_table_not_a_group():
    expect_error(
        lines("group 0 table 2", "1 1", "1 1"), 1, "not a group table: no two-sided identity"
    )


def test_error_truncated_iso():
    expect_error(
        lines("group 0 cyclic 6", "group 1 cyclic 9", "block 0 1", "iso 0 1", "H 0 3"),
        5,
        "unexpected end of file",
    )


def test_error_block_unknown_id():
    expect_error(lines("group 0 cyclic 2", "block 0 9"), 2, "unknown id '9'")


def test_error_block_empty():
    expect_error(lines("group 0 cyclic 2", "block"), 2, "block needs at least one id")


def test_error_id_in_two_blocks():
    expect_error(
        lines("group 0 cyclic 2", "block 0", "block 0"), 3, "id '0' already belongs to a block"
    )


def test_error_id_in_no_block():
    expect_error(
        lines("group 0 cyclic 2", "group 1 cyclic 2", "block 0"), 2, "id '1' belongs to no block"
    )


def test_error_iso_arity():
    expect_error(lines("group 0 cyclic 2", "block 0", "iso 0"), 3, "expected 'iso <x> <y>'")


def test_error_iso_unknown_id():
    expect_error(
        lines(
            "group 0 cyclic 6",
            "group 1 cyclic 9",
            "block 0 1",
            "iso 0 q",
            "H 0 3",
            "K 0 3 6",
            "map 0:0 1:1 2:2",
            "end",
        ),
        4,
        "unknown id 'q'",
    )


def test_error_iso_wrong_order():
    expect_error(
        lines(
            "group 0 cyclic 9",
            "group 1 cyclic 6",
            "block 0 1",
            "iso 1 0",
            "H 0 3",
            "K 0 3 6",
            "map 0:0 1:1 2:2",
            "end",
        ),
        4,
        "iso requires '1' declared before '0'",
    )


def test_error_iso_crosses_blocks():
    expect_error(
        lines(
            "group 0 cyclic 6",
            "group 1 cyclic 9",
            "block 0",
            "block 1",
            "iso 0 1",
            "H 0 3",
            "K 0 3 6",
            "map 0:0 1:1 2:2",
            "end",
        ),
        5,
        "iso (0,1) crosses blocks",
    )


def test_error_duplicate_iso():
    body = ("iso 0 1", "H 0 3", "K 0 3 6", "map 0:0 1:1 2:2", "end")
    expect_error(
        lines("group 0 cyclic 6", "group 1 cyclic 9", "block 0 1", *body, *body),
        9,
        "duplicate iso for (0,1)",
    )


def test_error_missing_pair():
    expect_error(
        lines("group 0 cyclic 6", "group 1 cyclic 9", "block 0 1"),
        3,
        "missing iso for in-block pair (0,1)",
    )


def test_error_iso_body_out_of_order():
    expect_error(
        lines(
            "group 0 cyclic 6",
            "group 1 cyclic 9",
            "block 0 1",
            "iso 0 1",
            "K 0 3 6",
            "H 0 3",
            "map 0:0 1:1 2:2",
            "end",
        ),
        5,
        "expected 'H' here, got 'K'",
    )


def test_error_map_entry_without_colon():
    expect_error(
        lines(
            "group 0 cyclic 6",
            "group 1 cyclic 9",
            "block 0 1",
            "iso 0 1",
            "H 0 3",
            "K 0 3 6",
            "map 0=0 1:1 2:2",
            "end",
        ),
        7,
        "map entry '0=0' lacks ':'",
    )


def test_error_h_element_out_of_range():
    expect_error(
        lines(
            "group 0 cyclic 6",
            "group 1 cyclic 9",
            "block 0 1",
            "iso 0 1",
            "H 0 7",
            "K 0 3 6",
            "map 0:0 1:1 2:2",
            "end",
        ),
        5,
        "element 7 outside group '0'",
    )


def test_error_h_not_a_subgroup():
    expect_error(
        lines(
            "group 0 cyclic 6",
            "group 1 cyclic 9",
            "block 0 1",
            "iso 0 1",
            "H 0 1",
            "K 0 3 6",
            "map 0:0 1:1 2:2",
            "end",
        ),
        5,
        "is not a subgroup",
    )


def test_error_h_not_normal():
    table_rows = [
        "0 1 2 3 4 5",
        "1 0 4 5 2 3",
        "2 3 0 1 5 4",
        "3 2 5 4 0 1",
        "4 5 1 0 3 2",
        "5 4 3 2 1 0",
    ]
    expect_error(
        lines(
            "group 0 table 6",
            *table_rows,
            "group 1 table 6",
            *table_rows,
            "block 0 1",
            "iso 0 1",
            "H 0 1",
            "K 0 1",
            "map 0:0 2:2 4:4",
            "end",
        ),
        17,
        "H is not normal in group '0'",
    )


def test_error_incompatible_quotients():
    expect_error(
        lines(
            "group 0 cyclic 6",
            "group 1 cyclic 9",
            "block 0 1",
            "iso 0 1",
            "H 0 3",
            "K 0",
            "map 0:0 1:1 2:2",
            "end",
        ),
        4,
        "incompatible quotients: 3 H-cosets vs 9 K-cosets",
    )


def test_error_map_entry_count():
    expect_error(
        lines(
            "group 0 cyclic 6",
            "group 1 cyclic 9",
            "block 0 1",
            "iso 0 1",
            "H 0 3",
            "K 0 3 6",
            "map 0:0 1:1",
            "end",
        ),
        7,
        "map has 2 entries, expected 3",
    )


def test_error_map_bad_representative():
    expect_error(
        lines(
            "group 0 cyclic 6",
            "group 1 cyclic 9",
            "block 0 1",
            "iso 0 1",
            "H 0 3",
            "K 0 3 6",
            "map 0:0 0:1 2:2",
            "end",
        ),
        7,
        "entry 1: 0 does not represent H-coset 1",
    )


def test_error_map_image_out_of_range():
    expect_error(
        lines(
            "group 0 cyclic 6",
            "group 1 cyclic 9",
            "block 0 1",
            "iso 0 1",
            "H 0 3",
            "K 0 3 6",
            "map 0:77 1:1 2:2",
            "end",
        ),
        7,
        "entry 0: 77 outside group '1'",
    )


def test_error_map_not_isomorphism():
    expect_error(
        lines(
            "group 0 cyclic 4",
            "group 1 cyclic 4",
            "block 0 1",
            "iso 0 1",
            "H 0",
            "K 0",
            "map 0:0 1:2 2:1 3:3",
            "end",
        ),
        7,
        "map is not a quotient isomorphism: not homomorphic at cosets (1,1)",
    )


def test_error_object_carries_line_and_reason():
    with pytest.raises(FrameFormatError) as info:
        parse_frame(lines("argle"))
    assert info.value.line == 1
    assert info.value.reason == "unknown directive 'argle'"
    assert str(info.value) == "line 1: unknown directive 'argle'"
