"""Reference cycle tables for small n, written as digit strings."""
from __future__ import annotations

# n = 6: the two indefinite regions are the two orientations of one local triangle.
EXCLUSIVE_PAIRS_6 = [("145236", "125634")]

# n = 7: each pair comes from ignoring one label and flipping a local triangle.
EXCLUSIVE_PAIRS_7 = [
    ("1523674", "1256347"),
    ("1526347", "1236745"),
    ("1263745", "1562347"),
    ("1562374", "1267345"),
    ("1526734", "1456237"),
    ("1452637", "1256734"),
    ("1256374", "1452367"),
]

# n = 8: the fifteen relabelling orbits of two-standard cycles.  The first
# eight have diagonal distance two, the last seven carry an indefinite pattern.
ORBITS_8 = [
    ("13456782 13245678 12435678 12354678"
     " 12346578 12345768 12345687 18234567"),
    ("14567823 13425678 12453678 12356478"
     " 12346758 12345786 17234568 12834567"),
    ("15678234 13452678 12456378 12356748"
     " 12346785 16234578 12734568 12384567"),
    ("16782345 13456278 12456738 12356784"
     " 15234678 12634578 12374568 12348567"),
    ("17823456 13456728 12456783 14235678"
     " 12534678 12364578 12347568 12345867"),
    ("14567283 14256783 14253678 12536478"
     " 12364758 12347586 17234586 17283456"),
    ("15672834 14526783 14256378 12536748"
     " 12364785 16234758 12734586 17238456"),
    ("16728345 14562783 14256738 12536784"
     " 15236478 12634758 12374586 17234856"),
    ("12563478 12367458 12347856 16723458"
     " 12783456 14567238 12567834 14523678"),
    ("12563748 12367485 16234785 16273458"
     " 12738456 15672384 15267834 14526378"),
    ("12567348 12367845 15623478 12673458"
     " 12378456 15672348 12678345 14562378"),
    ("12567384 15236784 15263478 12637458"
     " 12374856 16723485 16278345 14562738"),
    ("12563784 15236748 12634785 16237458"
     " 12734856 16723845 15627834 14526738"),
    ("12637485 16237485 16273485 16273845"
     " 15627384 15267384 15263784 15263748"),
    ("12673845 15623784 15267348 12637845"
     " 15623748 12673485 16237845 15627348"),
]
DISTANCE_TWO_ORBITS_8 = 8


def digits(s: str) -> tuple[int, ...]:
    """``"1526374"`` -> ``(1, 5, 2, 6, 3, 7, 4)``; single-digit labels only."""
    return tuple(int(ch) for ch in s)


def orbit_lists_8() -> list[list[tuple[int, ...]]]:
    return [[digits(s) for s in row.split()] for row in ORBITS_8]


def exclusive_pairs(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    table = {6: EXCLUSIVE_PAIRS_6, 7: EXCLUSIVE_PAIRS_7}
    if n not in table:
        raise ValueError("exclusive pair tables exist for n = 6 and n = 7 only")
    return [(digits(a), digits(b)) for a, b in table[n]]
