"""Published worked-example values, transcribed as exact rationals."""
from __future__ import annotations

ONE = "1"

# six-node product-structure network
GREATEST_STEP1 = [
    ["1", "1", "1", "1", "25/36", "5/9"],
    ["1", "1", "1", "1", "5/8", "1/2"],
    ["1", "1", "1", "1", "25/36", "5/9"],
    ["1", "1", "1", "1", "5/8", "1/2"],
    ["1", "1", "1", "1", "1", "1"],
    ["1", "1", "1", "1", "1", "1"],
]
GREATEST_FIXED = [
    ["1", "1", "1", "625/648", "25/36", "5/9"],
    ["1", "1", "1", "125/128", "5/8", "1/2"],
    ["1", "1", "1", "125/128", "25/36", "5/9"],
    ["1", "1", "1", "1", "5/8", "1/2"],
    ["1", "1", "1", "1", "1", "1"],
    ["1", "1", "1", "1", "1", "1"],
]

PREORDER_TRACE = [
    [
        ["1", "1", "1", "1", "5/9", "4/9"],
        ["8/9", "1", "9/10", "1", "1/2", "2/5"],
        ["8/9", "1", "1", "1", "5/9", "4/9"],
        ["8/9", "1", "9/10", "1", "1/2", "2/5"],
        ["1", "1", "1", "1", "1", "4/5"],
        ["1", "1", "1", "1", "9/10", "1"],
    ],
    [
        ["1", "8/9", "8/9", "50/81", "5/9", "4/9"],
        ["64/81", "1", "4/5", "5/8", "1/2", "2/5"],
        ["64/81", "1", "1", "5/8", "5/9", "4/9"],
        ["64/81", "1", "4/5", "1", "1/2", "2/5"],
        ["80/81", "1", "1", "1", "1", "4/5"],
        ["8/9", "1", "1", "1", "9/10", "1"],
    ],
    [
        ["1", "64/81", "64/81", "50/81", "5/9", "32/81"],
        ["512/729", "1", "4/5", "5/8", "40/81", "2/5"],
        ["512/729", "1", "1", "5/8", "40/81", "2/5"],
        ["512/729", "1", "4/5", "1", "40/81", "2/5"],
        ["640/729", "1", "1", "1", "1", "32/45"],
        ["64/81", "1", "1", "1", "9/16", "1"],
    ],
    [
        ["1", "512/729", "512/729", "50/81", "5/9", "256/729"],
        ["4096/6561", "1", "4/5", "50/81", "320/729", "2/5"],
        ["4096/6561", "8/9", "1", "50/81", "320/729", "2/5"],
        ["4096/6561", "1", "4/5", "1", "320/729", "2/5"],
        ["5120/6561", "1", "1", "1", "1", "256/405"],
        ["512/729", "1", "9/10", "1", "9/16", "1"],
    ],
]
PREORDER_DEGREES = ["2/5", "50/81", "5/8", "8/9"]

# the 3/5 run returns the first iterate of the 4/5 run
PREORDER_AT_3_5 = PREORDER_TRACE[0]

# three-node counterexample: output of the preorder solver at 3/4
COUNTER_AT_3_4 = [
    ["1", "1/5", "3/50"],
    ["3/10", "1", "3/10"],
    ["3/25", "2/5", "1"],
]
