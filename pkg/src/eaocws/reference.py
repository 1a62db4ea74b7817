"""
Reference data for the ring-6 worked example (n=6, c=3, r=1), the ring-5
induced-word anchor, and the target K of each parameter table cell.
"""

RING6_LAYOUT = {"n": 6, "c": 3, "r": 1}

RING6_GENERATORS = {
    "s_1": "XZIIIZ|III",
    "s_2": "ZXZIII|III",
    "s_3": "IZXZII|ZII",
    "s_4": "IIZXZI|IZI",
    "s_5": "IIIZXZ|IIZ",
    "s_6": "ZIIIZX|III",
    "h_1": "IIZIII|XII",
    "h_2": "IIIZII|IXI",
    "h_3": "IIIIZI|IIX",
    "g_1": "IIIIIZ|III",
}

# Z/I letters of the 15 distinct nonzero effective errors for single-qubit errors.
RING6_EFFECTIVE = [
    "ZIIIII|III", "ZIZIII|III", "ZZIIII|III",
    "IZIIII|III", "ZIIIZI|III", "ZZZIII|III",
    "IIZIII|III", "IZIZII|ZII", "IZZZII|ZII",
    "IIIZII|III", "IIZIZI|IZI", "IIZZZI|IZI",
    "IIIIZI|III", "IIIZII|IIZ", "IIIZZI|IIZ",
]

RING6_CODEWORDS = [
    "000000|000", "110100|010", "110100|101", "110100|110",
    "111100|011", "000010|101", "010100|111", "101000|100",
]

RING6_WORD_OPERATORS = [
    "IIIIII|III", "ZZIZII|IZI", "ZZIZII|ZIZ", "ZZIZII|ZZI",
    "ZZZZII|IZZ", "IIIIZI|ZIZ", "IZIZII|ZZZ", "ZIZIII|ZII",
]

RING6_ELIMINATED = [
    "IIIIII|III", "ZZZYZI|III", "ZIXZXZ|III", "ZIYXZI|III",
    "ZZIXYZ|III", "IZXIYZ|III", "IIYYYZ|III", "ZZYZII|III",
]

RING6_UNENCODED = [
    "IIIIII", "XXIYII", "XXZXZI", "XXZYII",
    "XXXYZI", "IIZIYI", "IXZYZI", "XIYIII",
]

# unencoded operators grouped by their ancilla action
RING6_CLASSES = {
    "00": ["IIIIII", "IIZIYI"],
    "11": ["XXIYII", "XXZXZI", "XXZYII", "XXXYZI"],
    "01": ["IXZYZI"],
    "10": ["XIYIII"],
}

RING6_SELECTED_UNENCODED = ["IIIIII", "IXZYZI", "XIYIII", "XXIYII"]
RING6_K = 4
RING6_D = 3

RING5_LAYOUT = {"n": 5, "c": 1, "r": 1}
RING5_GENERATORS = {
    "s_1": "XZIIZ|I",
    "s_2": "ZXZII|I",
    "s_3": "IZXZI|I",
    "s_4": "IIZXZ|Z",
    "s_5": "ZIIZX|I",
    "h_1": "IIIZI|X",
    "g_1": "IIIIZ|I",
}
RING5_ANCHOR = ("IXIXI|I", "10000|1")

# (n, c, r) -> target K; additive entries list K = 2^k.
TABLE_D3 = {
    (5, 2, 1): 4, (5, 3, 1): 2,
    (6, 1, 1): 2, (6, 2, 1): 4, (6, 3, 1): 4, (6, 4, 1): 2,
    (6, 2, 2): 4, (6, 3, 2): 2,
    (7, 1, 1): 4, (7, 2, 1): 8, (7, 3, 1): 7, (7, 4, 1): 4, (7, 5, 1): 2,
    (7, 1, 2): 2, (7, 2, 2): 4, (7, 3, 2): 4, (7, 4, 2): 2,
    (7, 2, 3): 4, (7, 3, 3): 2,
}
TABLE_D5 = {(7, 4, 1): 4, (7, 5, 1): 2}
TABLES = {1: (3, TABLE_D3), 2: (5, TABLE_D5)}


def example_certificate_path():
    """Path of the bundled certificate for the ring-6 example code."""
    from importlib.resources import files
    return files("eaocws") / "data" / "ring6_example.json"
