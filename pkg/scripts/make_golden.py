#!/usr/bin/env python3
"""Regenerate the bundled reference tables from their scaled shorthand form.

The published reference vectors are recorded below exactly as they appear in
shorthand, ``2^k(a, b, ...)`` meaning the vector scaled by 2**k.  Running
this script expands them to exact decimal CSV rows and writes the data both
into the package (src/ribbonmod/data/) and the repository copy (data/).
"""

from __future__ import annotations

import csv
import pathlib
import re

ROOT = pathlib.Path(__file__).resolve().parent.parent
TARGETS = (ROOT / "src" / "ribbonmod" / "data", ROOT / "data")

# ---------------------------------------------------------------------------
# type A: rows n = 2..15, columns p = 2, 3, 5, 7, 11

TABLE_A = {
    2: ["2(0, 1)", "2(0, 1, 0)", "2(0, 1, 0, 0, 0)", "2(0, 1, 0, 0, 0, 0, 0)", "2(0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0)"],
    3: ["2(1, 1)", "2(0, 1, 1)", "2(0, 1, 1, 0, 0)", "2(0, 1, 1, 0, 0, 0, 0)", "2(0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0)"],
    4: ["2^3(0, 1)", "2(2, 1, 1)", "2(1, 1, 0, 2, 0)", "2(0, 1, 0, 2, 0, 1, 0)", "2(0, 1, 0, 2, 0, 1, 0, 0, 0, 0, 0)"],
    5: ["2^3(1, 1)", "2(3, 4, 1)", "2^3(0, 1, 0, 0, 1)", "2(0, 1, 3, 0, 3, 0, 1)", "2(1, 1, 0, 0, 2, 1, 1, 0, 0, 2, 0)"],
    6: ["2^4(1, 1)", "2^4(0, 1, 1)", "2^3(2, 1, 0, 0, 1)", "2(4, 1, 0, 2, 0, 9, 0)", "2(0, 1, 2, 2, 2, 2, 1, 2, 2, 0, 2)"],
    7: ["2^5(1, 1)", "2^2(6, 5, 5)", "2^2(6, 4, 1, 1, 4)", "2^5(0, 1, 0, 0, 0, 0, 1)", "2(5, 9, 1, 0, 3, 3, 4, 1, 1, 5, 0)"],
    8: ["2^7(0, 1)", "2(21, 17, 26)", "2(22, 9, 12, 12, 9)", "2^5(2, 1, 0, 0, 0, 0, 1)", "2(6, 7, 5, 5, 8, 7, 9, 6, 5, 1, 5)"],
    9: ["2^7(1, 1)", "2^7(0, 1, 1)", "2^2(19, 16, 8, 11, 10)", "2^4(6, 4, 1, 0, 0, 1, 4)", "2(4, 13, 13, 5, 12, 14, 22, 6, 19, 10, 10)"],
    10: ["2^8(1, 1)", "2^7(2, 1, 1)", "2^8(0, 1, 0, 0, 1)", "2^3(20, 9, 7, 6, 6, 7, 9)", "2(27, 25, 35, 14, 16, 38, 19, 20, 13, 24, 25)"],
    11: ["2^9(1, 1)", "2^6(6, 5, 5)", "2^6(6, 4, 1, 1, 4)", "2^2(56, 40, 21, 39, 39, 21, 40)", "2^9(0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1)"],
    12: ["2^10(1, 1)", "2^9(2, 1, 1)", "2^4(38, 30, 15, 15, 30)", "2(204, 139, 134, 137, 137, 134, 139)", "2^9(2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1)"],
    13: ["2^11(1, 1)", "2^6(30, 17, 17)", "2^3(134, 102, 87, 87, 102)", "2(503, 276, 294, 241, 209, 316, 209)", "2^8(6, 4, 1, 0, 0, 0, 0, 0, 0, 1, 4)"],
    14: ["2^12(1, 1)", "2^3(406, 309, 309)", "2(999, 855, 716, 666, 860)", "2^12(0, 1, 0, 0, 0, 0, 1)", "2^7(20, 9, 6, 6, 0, 1, 1, 0, 6, 6, 9)"],
    15: ["2^8(35, 29)", "2^10(6, 5, 5)", "2^12(0, 1, 1, 1, 1)", "2^10(6, 4, 1, 0, 0, 1, 4)", "2^6(64, 23, 9, 30, 13, 21, 21, 13, 30, 9, 23)"],
}
PRIMES_A = (2, 3, 5, 7, 11)

# ---------------------------------------------------------------------------
# type B: rows n = 2..15, columns p = 3, 5, 7, 11

TABLE_B = {
    2: ["2(1, 1, 0)", "2(0, 1, 0, 1, 0)", "2(0, 1, 0, 1, 0, 0, 0)", "2(0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0)"],
    3: ["2^2(0, 1, 1)", "2(1, 2, 1, 0, 0)", "2(1, 1, 0, 0, 1, 1, 0)", "2(1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0)"],
    4: ["2(2, 3, 3)", "2(1, 3, 3, 1, 0)", "2(1, 3, 1, 2, 0, 0, 1)", "2(0, 2, 1, 0, 1, 0, 1, 1, 1, 1, 0)"],
    5: ["2(4, 9, 3)", "2^4(0, 1, 0, 0, 1)", "2(4, 1, 4, 2, 4, 0, 1)", "2(3, 1, 2, 0, 0, 1, 1, 2, 1, 5, 0)"],
    6: ["2^4(2, 1, 1)", "2^3(0, 3, 1, 1, 3)", "2(4, 7, 4, 6, 5, 2, 4)", "2(4, 7, 1, 2, 2, 3, 2, 1, 9, 1, 0)"],
    7: ["2^4(2, 3, 3)", "2^2(6, 7, 6, 6, 7)", "2^6(0, 1, 0, 0, 0, 0, 1)", "2(7, 3, 6, 5, 7, 9, 8, 7, 5, 6, 1)"],
    8: ["2(50, 39, 39)", "2^3(6, 8, 5, 5, 8)", "2^5(0, 3, 0, 1, 1, 0, 3)", "2(13, 13, 11, 13, 8, 10, 11, 12, 13, 10, 14)"],
    9: ["2^8(0, 1, 1)", "2(52, 59, 49, 56, 40)", "2^4(4, 6, 3, 5, 5, 3, 6)", "2(29, 15, 29, 25, 19, 19, 26, 21, 37, 21, 15)"],
    10: ["2^7(2, 3, 3)", "2^8(0, 1, 1, 1, 1)", "2^3(26, 19, 19, 13, 13, 19, 19)", "2(59, 46, 51, 47, 43, 47, 41, 50, 37, 51, 40)"],
    11: ["2^8(2, 3, 3)", "2^6(6, 7, 6, 6, 7)", "2^2(58, 91, 62, 74, 74, 62, 91)", "2^10(0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1)"],
    12: ["2^9(2, 3, 3)", "2^6(6, 12, 17, 17, 12)", "2(248, 256, 307, 337, 337, 307, 256)", "2^9(0, 3, 0, 1, 0, 0, 0, 0, 1, 0, 3)"],
    13: ["2^7(18, 23, 23)", "2^2(458, 440, 355, 355, 440)", "2(570, 696, 516, 565, 571, 525, 653)", "2^8(2, 6, 0, 4, 2, 3, 3, 2, 4, 0, 6)"],
    14: ["2^5(166, 173, 173)", "2(1523, 1775, 1647, 1567, 1680)", "2^12(0, 1, 0, 1, 1, 0, 1)", "2^7(14, 14, 13, 9, 10, 11, 11, 10, 9, 13, 14)"],
    15: ["2^12(2, 3, 3)", "2^12(2, 2, 1, 1, 2)", "2^10(4, 6, 3, 5, 5, 3, 6)", "2^6(44, 48, 49, 40, 52, 45, 45, 52, 40, 49, 48)"],
}
PRIMES_B = (3, 5, 7, 11)

# ---------------------------------------------------------------------------
# type D: rows n = 4..16, columns p = 3, 5, 7, 11

TABLE_D = {
    4: ["(0, 8, 8)", "(0, 2, 12, 2, 0)", "(6, 2, 2, 6, 0, 0, 0)", "(0, 4, 0, 0, 0, 0, 6, 6, 0, 0, 0)"],
    5: ["(12, 16, 4)", "(16, 8, 0, 0, 8)", "(6, 6, 10, 2, 4, 0, 4)", "(6, 2, 2, 0, 4, 2, 6, 0, 2, 4, 4)"],
    6: ["(16, 24, 24)", "(0, 32, 0, 0, 32)", "(4, 12, 10, 8, 12, 6, 12)", "(12, 6, 0, 0, 6, 6, 4, 4, 14, 8, 4)"],
    7: ["(56, 36, 36)", "(16, 32, 24, 24, 32)", "(64, 32, 0, 0, 0, 0, 32)", "(18, 4, 8, 4, 22, 16, 12, 10, 16, 16, 2)"],
    8: ["(96, 80, 80)", "(52, 62, 40, 40, 62)", "(0, 128, 0, 0, 0, 0, 128)", "(18, 28, 24, 18, 22, 18, 30, 24, 26, 22, 26)"],
    9: ["(256, 128, 128)", "(104, 112, 100, 96, 100)", "(0, 128, 32, 96, 96, 32, 128)", "(36, 40, 72, 52, 40, 24, 38, 62, 62, 50, 36)"],
    10: ["2^9(0, 1, 1)", "2^7(0, 3, 1, 1, 3)", "2^3(20, 15, 19, 20, 20, 19, 15)", "2(47, 48, 45, 54, 47, 42, 36, 50, 50, 45, 48)"],
    11: ["2^7(6, 5, 5)", "2^6(2, 7, 8, 8, 7)", "2^3(32, 51, 29, 32, 32, 29, 51)", "2^9(2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1)"],
    12: ["2^8(2, 7, 7)", "2^4(38, 47, 62, 62, 47)", "2(280, 250, 341, 293, 293, 341, 250)", "2^11(0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1)"],
    13: ["2^6(38, 45, 45)", "2^3(190, 237, 180, 180, 237)", "2(614, 631, 521, 599, 601, 530, 600)", "2^9(0, 4, 0, 3, 0, 1, 1, 0, 3, 0, 4)"],
    14: ["2^4(306, 359, 359)", "2(1473, 1777, 1620, 1595, 1727)", "2^11(0, 3, 0, 1, 1, 0, 3)", "2^7(24, 15, 6, 4, 9, 18, 18, 9, 4, 6, 15)"],
    15: ["2^11(6, 5, 5)", "2^11(2, 2, 5, 5, 2)", "2^10(2, 7, 1, 7, 7, 1, 7)", "2^6(50, 58, 48, 32, 46, 47, 47, 46, 32, 48, 58)"],
    16: ["2^5(606, 721, 721)", "2^10(14, 15, 10, 10, 15)", "2^8(22, 44, 39, 34, 34, 39, 44)", "2^5(260, 195, 257, 158, 160, 124, 124, 160, 158, 257, 195)"],
}
PRIMES_D = (3, 5, 7, 11)

# ---------------------------------------------------------------------------
# exceptional groups: residue histograms for p = 2, 3, 5, 7, 11, 13

TABLE_EXCEPTIONAL = {
    "E6": [
        "2^5(1, 1)", "2^5(0, 1, 1)", "2(8, 7, 5, 5, 7)", "2^2(4, 2, 1, 2, 0, 7, 0)",
        "2(1, 4, 5, 2, 7, 1, 6, 3, 1, 2, 0)", "2(5, 5, 0, 2, 1, 0, 3, 3, 2, 3, 6, 1, 1)",
    ],
    "E7": [
        "2^7(0, 1)", "2^6(0, 1, 1)", "2^2(10, 8, 3, 3, 8)", "2^6(0, 1, 0, 0, 0, 0, 1)",
        "2(4, 5, 12, 3, 8, 7, 4, 8, 5, 4, 4)", "2(6, 7, 7, 7, 4, 3, 4, 3, 5, 1, 4, 7, 6)",
    ],
    "F4": [
        "2^4(0, 1)", "2^3(0, 1, 1)", "2(2, 1, 1, 3, 1)", "2(0, 2, 2, 1, 2, 0, 1)",
        "2(0, 3, 0, 0, 1, 0, 0, 3, 0, 1, 0)", "2(1, 1, 0, 0, 2, 0, 1, 0, 1, 0, 2, 0, 0)",
    ],
    "H3": [
        "2^3(0, 1)", "2^2(0, 1, 1)", "2^2(0, 1, 0, 0, 1)", "2(0, 2, 0, 0, 1, 1, 0)",
        "2(1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0)", "2(0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0)",
    ],
    "H4": [
        "2^4(0, 1)", "2^3(0, 1, 1)", "2^3(0, 1, 0, 0, 1)", "2(1, 2, 1, 0, 1, 1, 2)",
        "2(1, 1, 0, 0, 2, 1, 0, 1, 0, 2, 0)", "2(0, 2, 1, 2, 2, 0, 1, 0, 0, 0, 0, 0, 0)",
    ],
    "I2:5": [
        "2(1, 1)", "2^2(0, 1, 0)", "2(0, 1, 0, 0, 1)", "2(0, 1, 0, 0, 1, 0, 0)",
        "2(0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0)", "2(0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0)",
    ],
    "I2:6": [
        "2^2(0, 1)", "2(0, 1, 1)", "2(1, 1, 0, 0, 0)", "2(0, 1, 0, 0, 0, 1, 0)",
        "2(0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0)", "2(0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0)",
    ],
    "I2:7": [
        "2(1, 1)", "2(1, 1, 0)", "2^2(0, 1, 0, 0, 0)", "2(0, 1, 0, 0, 0, 0, 1)",
        "2(0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0)", "2(0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0)",
    ],
}
PRIMES_EXCEPTIONAL = (2, 3, 5, 7, 11, 13)

# ---------------------------------------------------------------------------
# exceptional groups: full descent-class multisets.  The published H3 list
# carries a ninth entry "29" that cannot belong to a rank-3 group (2^3 = 8
# classes; with it the sizes sum to 149 instead of |H3| = 120), so the
# 8-class multiset is recorded here.

MULTISETS = {
    "F4": "1^2, 23^4, 73^2, 95^4, 97^2, 169^2",
    "H3": "1^2, 11^2, 19^2, 29^2",
    "H4": "1^2, 119^2, 599^2, 601^2, 719^2, 1199^2, 1681^2, 2281^2",
    "E6": "1^2, 26^4, 71^2, 190^4, 215^4, 217^2, 334^4, 530^4, 647^4, 649^2, "
    "719^2, 793^4, 838^4, 1106^4, 1151^2, 1225^4, 1414^4, 1729^2, 2042^4, 2663^2",
    "E7": "1^2, 55^2, 125^2, 575^2, 701^2, 755^2, 1331^2, 1891^2, 2015^2, 3331^4, "
    "3401^2, 4031^2, 5473^2, 6679^2, 6749^2, 7309^2, 7939^2, 8009^2, 8189^2, "
    "8749^2, 9505^4, 10025^2, 10079^2, 10655^2, 10765^2, 14687^2, 15373^2, "
    "15553^2, 16003^2, 16829^2, 18145^2, 19459^2, 20035^2, 21491^2, 21545^2, "
    "22301^2, 22931^2, 25577^2, 26207^2, 26209^2, 26839^2, 27469^2, 28855^2, "
    "29539^2, 30185^2, 30925^2, 34273^2, 34903^2, 38249^2, 39635^2, 41021^2, "
    "42391^2, 44477^2, 45107^2, 49645^2, 50455^2, 55007^2, 59149^2, 62551^2, "
    "69875^2, 73331^2, 94121^2",
}
# dihedral groups: two classes of size 1 and two of size m - 1
for _m in range(3, 13):
    MULTISETS[f"I2:{_m}"] = f"1^2, {_m - 1}^2"

_SHORTHAND = re.compile(r"^(?:2(?:\^(\d+))?)?\((.*)\)$")


def expand(shorthand: str) -> tuple[int, ...]:
    match = _SHORTHAND.match(shorthand.strip())
    if not match:
        raise ValueError(f"bad shorthand {shorthand!r}")
    k = 0
    if shorthand.lstrip().startswith("2"):
        k = int(match.group(1)) if match.group(1) else 1
    scale = 1 << k
    return tuple(int(tok) * scale for tok in match.group(2).split(","))


def main():
    for target in TARGETS:
        target.mkdir(parents=True, exist_ok=True)
        for fname, family, table, primes in (
            ("type_a.csv", "A", TABLE_A, PRIMES_A),
            ("type_b.csv", "B", TABLE_B, PRIMES_B),
            ("type_d.csv", "D", TABLE_D, PRIMES_D),
        ):
            with (target / fname).open("w", newline="") as handle:
                writer = csv.writer(handle)
                writer.writerow(["family", "p", "n", "residue", "count"])
                for n in table:
                    for p, shorthand in zip(primes, table[n]):
                        vector = expand(shorthand)
                        if len(vector) != p:
                            raise ValueError(f"{family} n={n} p={p}: bad vector length")
                        for residue, count in enumerate(vector):
                            writer.writerow([family, p, n, residue, count])
        with (target / "exceptional_histograms.csv").open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["group", "p", "n", "residue", "count"])
            for group in TABLE_EXCEPTIONAL:
                for p, shorthand in zip(PRIMES_EXCEPTIONAL, TABLE_EXCEPTIONAL[group]):
                    vector = expand(shorthand)
                    if len(vector) != p:
                        raise ValueError(f"{group} p={p}: bad vector length")
                    for residue, count in enumerate(vector):
                        writer.writerow([group, p, "-", residue, count])
        with (target / "exceptional_multisets.txt").open("w") as handle:
            for group, body in MULTISETS.items():
                handle.write(f"{group}: {body}\n")
        print(f"wrote reference data under {target}")


if __name__ == "__main__":
    main()
