"""Hand-copied published values used as fixed expectations.

Sets are written as digit strings on [n]; a boundary term ``(pair, j)``
is the blade of ``pair`` on the facet that removed ``j``.
"""

# d(e_13, e_I) on [4] choose 2
D13 = {"12": 1, "34": 1, "13": 0, "14": 3, "23": 3, "24": 2}

# L_J on [4] choose 2, as {set: coefficient} in the blade basis
L_EXPANSIONS_N4 = {
    "12": {"12": -1, "24": 1},
    "14": {"14": -1, "13": 1},
    "23": {"23": -1, "13": 1},
    "34": {"34": -1, "24": 1},
    "24": {"24": -1, "14": 1, "23": 1, "13": -1},
    "13": {"13": -1, "12": 1, "34": 1, "24": -1},
}
D13_COMBINATION = {"13": 4, "12": -1, "23": -1, "34": -1, "14": -1}

# boundary of single blades on [6] choose 3, frozen terms dropped
BOUNDARIES_N6 = {
    "124": {("24", 1), ("14", 2), ("24", 5), ("24", 6)},
    "125": {("25", 1), ("15", 2), ("25", 6)},
    "134": {("14", 2), ("14", 3), ("13", 4)},
    "145": {("15", 2), ("15", 3), ("15", 4), ("14", 5)},
    "135": {("35", 1), ("15", 2), ("15", 3), ("13", 4), ("13", 5), ("35", 6)},
    "235": {("35", 1), ("35", 2), ("25", 3), ("35", 6)},
    "136": {("36", 1), ("13", 4), ("13", 5), ("13", 6)},
}

# ray generators written in the L-basis of [6] choose 3 (absent sets carry 0)
RAY_EXPANSIONS = {
    "135": {
        "123": 3, "124": 2, "125": 1, "126": 6, "134": 1, "136": 5, "145": 5, "146": 4, "156": 3,
        "234": 6, "235": 5, "236": 4, "245": 4, "246": 3, "256": 2, "345": 3, "346": 2, "356": 1, "456": 6,
    },
    "235": {
        "123": 4, "124": 3, "125": 2, "126": 7, "134": 2, "135": 1, "136": 6, "145": 6, "146": 5,
        "156": 6, "234": 1, "236": 5, "245": 5, "246": 4, "256": 3, "345": 5, "346": 3, "356": 2, "456": 7,
    },
    "145": {
        "123": 4, "124": 3, "125": 2, "126": 7, "134": 2, "135": 1, "136": 6, "146": 5, "156": 4,
        "234": 7, "235": 6, "236": 5, "245": 5, "246": 4, "256": 3, "345": 4, "346": 3, "356": 2, "456": 7,
    },
    "136": {
        "123": 4, "124": 3, "125": 2, "126": 1, "134": 2, "135": 1, "145": 6, "146": 5, "156": 4,
        "234": 7, "235": 6, "236": 5, "245": 5, "246": 4, "256": 4, "345": 4, "346": 3, "356": 2, "456": 7,
    },
}

# a maximal weakly separated collection in [8] choose 3 and its image under the boundary at 8
W8 = "127,137,136,156,167,135,145,134,123,234,345,456,567,678,178,128".split(",")
W8_BOUNDARY_8 = {"27", "37", "36", "35", "12", "23", "34", "45", "56", "67", "17"}
