"""Record tables as published (degree/diameter problem for undirected circulants).

Orders are exact integers.  Connection sets list the proper generators and,
for odd degree, the half generator n/2 last, matching the ``n;s1,...`` syntax.
"""

DEGREES = range(3, 17)
DIAMETERS = range(2, 11)

# degree -> nine (order, source) cells for diameters 2..10; None marks the unreadable cell
BIG_TABLE_ORDERS = {
    3: [(8, ""), (12, ""), (16, ""), (20, ""), (24, ""), (28, ""), (32, ""), (36, ""), (40, "")],
    4: [(13, ""), (25, ""), (41, ""), (61, ""), (85, ""), (113, ""), (145, ""), (181, ""), (221, "")],
    5: [(16, ""), (36, "Mac10"), (64, "Mac10"), (100, "Mac10"), (144, "Mac10"), (196, "Mac10"),
        (256, "Mac10"), (324, "Mac10"), (400, "Mac10")],
    6: [(21, "Del13"), (55, "Del13"), (117, "Del13"), (203, "Del13"), (333, "Mac10"),
        (515, "Mac10"), (737, "Mac10"), (1027, "Mac10"), (1393, "Mona12")],
    7: [(26, "Del13"), (76, "Mac10"), (160, "Mac10"), (308, "Mac10"), (536, "T2"), (828, "T2"),
        (1232, "T2"), (1764, "T2"), (2392, "T2")],
    8: [(35, "Del13"), (104, "T2"), (248, "T2"), (528, "T2"), (984, "lewis14"), (1712, "lewis14"),
        (2768, "lewis14"), (4280, "lewis14"), (6320, "lewis14")],
    9: [(42, "Del13"), (130, "Mac10"), (320, "T2"), (700, "lewis14"), (1416, "lewis14"),
        (2548, "lewis14"), (4304, "lewis14"), (6804, "lewis14"), (10320, "lewis14")],
    10: [(51, "Del13"), (177, "Mac10"), (457, "T2"), (1099, "lewis14b"), (1533, "T2"), (2925, "T2"),
         (5136, "T2"), (8560, "T2"), (13840, "T2")],
    11: [(56, "Del13"), (210, "T2"), (576, "T2"), (1380, "T2"), (2100, "T2"), (4088, "T2"),
         (7736, "T2"), (13400, "T2"), (21976, "T2")],
    12: [(67, "Del13"), (275, "T2"), (761, "T2"), (1800, "T2"), (3297, "T2"), (6864, "T2"),
         (13200, "T2"), (24600, "T2"), (42800, "T2")],
    13: [(80, "T3"), (312, "T3"), (920, "T3"), (1828, "T3"), (4396, "T3"), (9100, "T3"),
         (18720, "T3"), (36036, "T3"), (63700, "T3")],
    14: [(90, "T3"), (381, "T3"), (825, "T3"), (2285, "T3"), (5941, "T3"), (14287, "T3"),
         (29016, "T3"), (54120, "T3"), (113139, "T3")],
    15: [(96, "T3"), (448, "T3"), (1100, "T3"), (2880, "T3"), (7488, "T3"), (17584, "T3"),
         (39564, "T3"), (81900, "T3"), (154720, "T3")],
    16: [(112, "T2"), None, (936, "T3"), (3640, "T3"), (9597, "T3"), (25135, "T3"), (60445, "T3"),
         (128583, "T3"), (239816, "T3")],
}

BIG_TABLE_BOUNDS = {
    3: [8, 12, 16, 20, 24, 28, 32, 36, 40],
    4: [13, 25, 41, 61, 85, 113, 145, 181, 221],
    5: [18, 38, 66, 102, 146, 198, 258, 326, 402],
    6: [25, 63, 129, 231, 377, 575, 833, 1159, 1561],
    7: [32, 88, 192, 360, 608, 952, 1408, 1992, 2720],
    8: [41, 129, 321, 681, 1289, 2241, 3649, 5641, 8361],
    9: [50, 170, 450, 1002, 1970, 3530, 5890, 9290, 14002],
    10: [61, 231, 681, 1683, 3653, 7183, 13073, 22363, 36365],
    11: [72, 292, 912, 2364, 5336, 10836, 20256, 35436, 58728],
    12: [85, 377, 1289, 3653, 8989, 19825, 40081, 75517, 134245],
    13: [98, 462, 1666, 4942, 12642, 28814, 59906, 115598, 209762],
    14: [113, 575, 2241, 7183, 19825, 48639, 108545, 224143, 433905],
    15: [128, 688, 2816, 9424, 27008, 68464, 157184, 332688, 658048],
    16: [145, 833, 3649, 13073, 40081, 108545, 265729, 598417, 1256465],
}

BIG_TABLE_PERCENT = {
    3: [100] * 9,
    4: [100] * 9,
    5: [89, 95, 97, 98, 99, 99, 99, 99, 99],
    6: [84, 87, 91, 88, 88, 90, 88, 89, 89],
    7: [81, 86, 83, 86, 88, 87, 87, 88, 88],
    8: [85, 77, 75, 77, 76, 76, 76, 76, 76],
    9: [84, 76, 71, 70, 72, 72, 73, 73, 74],
    10: [84, 77, 67, 65, 42, 40, 39, 38, 38],
    11: [78, 72, 63, 58, 39, 37, 38, 38, 37],
    12: [79, 73, 59, 49, 36, 34, 33, 32, 32],
    13: [82, 68, 55, 37, 35, 31, 31, 31, 30],
    14: [80, 66, 37, 32, 30, 30, 27, 24, 26],
    15: [75, 65, 39, 30, 28, 25, 25, 24, 23],
    16: [25, 11, 25, 28, 24, 23, 23, 21, 19],
}

# (degree, diameter, order, generators, flags); flags: "L" found independently
# and proved optimal, "*" found by the pruned search, "_" sub-optimal
SEARCH_TABLE = [
    (8, 3, 104, (1, 16, 20, 27), "L*"),
    (8, 4, 248, (1, 61, 72, 76), "L*"),
    (8, 5, 528, (1, 89, 156, 162), "L*"),
    (8, 5, 511, (1, 5, 70, 96), "_*"),
    (8, 6, 967, (1, 7, 132, 182), "_*"),
    (9, 4, 320, (1, 15, 25, 83, 160), "L*"),
    (10, 4, 457, (1, 20, 130, 147, 191), "*"),
    (10, 5, 1099, (1, 53, 207, 272, 536), "L"),
    (11, 3, 210, (1, 49, 59, 84, 89, 105), "*"),
    (11, 4, 576, (1, 9, 75, 155, 179, 288), "*"),
    (11, 5, 1380, (1, 33, 173, 387, 663, 690), "*"),
    (12, 3, 275, (1, 16, 19, 29, 86, 110), "*"),
    (12, 4, 761, (1, 12, 184, 235, 334, 362), "*"),
    (12, 5, 1800, (1, 30, 64, 384, 761, 841), "*"),
    (13, 3, 312, (1, 14, 74, 77, 130, 138, 156), "*"),
    (13, 4, 920, (1, 11, 38, 176, 232, 376, 460), "*"),
    (14, 3, 381, (1, 11, 103, 120, 155, 161, 187), "*"),
    (15, 3, 448, (1, 10, 127, 150, 176, 189, 217, 224), "*"),
]

# ((degree, diameter, order), (d1, D1, n1), (d2, D2, n2)) for G1 x G2
PRODUCT_TABLE = [
    ((10, 6, 1533), (2, 1, 3), (8, 5, 511)),
    ((10, 7, 2925), (4, 3, 25), (6, 4, 117)),
    ((10, 8, 5136), (2, 1, 3), (8, 7, 1712)),
    ((10, 9, 8560), (2, 2, 5), (8, 7, 1712)),
    ((10, 10, 13840), (2, 2, 5), (8, 8, 2768)),
    ((11, 6, 2100), (2, 1, 3), (9, 5, 700)),
    ((11, 7, 4088), (3, 2, 8), (8, 5, 511)),
    ((11, 8, 7736), (3, 2, 8), (8, 6, 984)),
    ((11, 9, 13400), (4, 3, 25), (7, 6, 536)),
    ((11, 10, 21976), (4, 4, 41), (7, 6, 536)),
    ((12, 6, 3297), (2, 1, 3), (10, 5, 1099)),
    ((12, 7, 6864), (4, 2, 13), (8, 5, 528)),
    ((12, 8, 13200), (4, 3, 25), (8, 5, 528)),
    ((12, 9, 24600), (4, 3, 25), (8, 6, 984)),
    ((12, 10, 42800), (4, 3, 25), (8, 7, 1712)),
    ((13, 5, 1828), (3, 1, 4), (10, 4, 457)),
    ((13, 6, 4396), (3, 1, 4), (10, 5, 1099)),
    ((13, 7, 9100), (4, 2, 13), (9, 5, 700)),
    ((13, 8, 18720), (6, 4, 117), (7, 4, 160)),
    ((13, 9, 36036), (6, 4, 117), (7, 5, 308)),
    ((13, 10, 63700), (4, 3, 25), (9, 7, 2548)),
    ((14, 4, 825), (2, 1, 3), (12, 3, 275)),
    ((14, 5, 2285), (4, 1, 5), (10, 4, 457)),
    ((14, 6, 5941), (4, 2, 13), (10, 4, 457)),
    ((14, 7, 14287), (4, 2, 13), (10, 5, 1099)),
    ((14, 8, 29016), (6, 4, 117), (8, 4, 248)),
    ((14, 9, 59787), (6, 4, 117), (8, 5, 511)),
    ((14, 10, 113139), (6, 4, 117), (8, 6, 967)),
    ((15, 4, 1100), (3, 1, 4), (12, 3, 275)),
    ((15, 5, 3044), (3, 1, 4), (12, 4, 761)),
    ((15, 6, 7524), (7, 3, 76), (8, 3, 99)),
    ((15, 7, 17940), (4, 2, 13), (11, 5, 1380)),
    ((15, 8, 39564), (5, 3, 36), (10, 5, 1099)),
    ((15, 9, 81900), (6, 4, 117), (9, 5, 700)),
    ((15, 10, 154720), (7, 4, 160), (8, 6, 967)),
    ((16, 5, 3805), (4, 1, 5), (12, 4, 761)),
    ((16, 6, 10296), (8, 3, 99), (8, 3, 104)),
    ((16, 7, 25135), (6, 3, 55), (10, 4, 457)),
    ((16, 8, 60445), (6, 3, 55), (10, 5, 1099)),
    ((16, 9, 128583), (6, 4, 117), (10, 5, 1099)),
    ((16, 10, 269808), (8, 5, 511), (8, 5, 528)),
]

# (degree, diameter, order, generators, optimal)
NEW_NETWORKS = [
    (7, 6, 536, (1, 231, 239, 268), True),
    (7, 7, 828, (1, 9, 91, 414), True),
    (7, 8, 1232, (1, 11, 111, 616), True),
    (7, 9, 1764, (1, 803, 815, 882), True),
    (7, 10, 2392, (1, 13, 183, 1196), True),
    (8, 3, 104, (1, 16, 20, 27), True),
    (8, 4, 248, (1, 61, 72, 76), True),
    (8, 5, 528, (1, 89, 156, 162), False),
    (8, 6, 967, (1, 7, 132, 182), False),
    (8, 7, 1545, (1, 170, 178, 468), False),
    (9, 4, 320, (1, 15, 25, 83, 160), True),
    (9, 5, 684, (1, 111, 145, 279, 342), False),
    (9, 6, 1284, (1, 36, 163, 342, 642), False),
    (9, 7, 2340, (1, 149, 157, 645, 1170), False),
    (10, 4, 457, (1, 20, 130, 147, 191), False),
    (10, 5, 1099, (1, 53, 207, 272, 536), False),
    (10, 6, 1533, (3, 15, 210, 288, 511), False),
    (10, 7, 2925, (25, 351, 400, 468, 550), False),
    (10, 8, 5136, (3, 645, 1712, 1824, 1848), False),
    (10, 9, 8560, (5, 1075, 1712, 3040, 3080), False),
    (10, 10, 13840, (5, 1032, 2768, 5360, 5400), False),
    (11, 3, 210, (1, 49, 59, 84, 89, 105), True),
    (11, 4, 576, (1, 9, 75, 155, 179, 288), False),
    (11, 5, 1380, (1, 33, 173, 387, 663, 690), False),
    (11, 6, 2100, (3, 15, 591, 669, 700, 1050), False),
    (11, 7, 4088, (8, 40, 511, 560, 768, 2044), False),
    (11, 8, 7736, (8, 56, 967, 1056, 1456, 3868), False),
    (11, 9, 13400, (25, 1608, 2144, 5775, 5975, 6700), False),
    (11, 10, 21976, (41, 2144, 2680, 9471, 9799, 10988), False),
    (12, 3, 275, (1, 16, 19, 29, 86, 110), False),
    (12, 4, 761, (1, 12, 184, 235, 334, 362), False),
    (12, 5, 1800, (1, 30, 64, 384, 761, 841), False),
    (12, 6, 3297, (3, 159, 621, 816, 1099, 1608), False),
    (12, 7, 6864, (13, 1056, 1157, 1584, 2028, 2106), False),
    (12, 8, 13200, (25, 1584, 2112, 2225, 3900, 4050), False),
    (12, 9, 24600, (25, 2952, 3936, 4075, 8700, 8850), False),
    (12, 10, 42800, (25, 5136, 5375, 6848, 15200, 15400), False),
    (13, 2, 80, (1, 3, 9, 20, 25, 33, 40), False),
    (13, 3, 312, (1, 14, 74, 77, 130, 138, 156), False),
    (13, 4, 920, (1, 11, 38, 176, 232, 376, 460), False),
    (13, 5, 1828, (4, 80, 457, 520, 588, 764, 914), False),
    (13, 6, 4396, (4, 212, 828, 1088, 1099, 2144, 2198), False),
    (13, 7, 9100, (13, 65, 1400, 2100, 2561, 2899, 4550), False),
    (13, 8, 18720, (117, 160, 585, 2560, 3520, 3627, 9360), False),
    (13, 9, 36036, (117, 308, 819, 4928, 5031, 6776, 18018), False),
    (13, 10, 63700, (25, 175, 7644, 10192, 13025, 14275, 31850), False),
    (14, 2, 90, (1, 4, 10, 17, 26, 29, 41), True),
    (14, 3, 381, (1, 11, 103, 120, 155, 161, 187), True),
    (14, 4, 825, (3, 48, 57, 87, 258, 275, 330), True),
    (14, 5, 2285, (5, 100, 457, 650, 735, 914, 955), True),
    (14, 6, 5941, (13, 260, 914, 1371, 1690, 1911, 2483), True),
    (14, 7, 14287, (13, 689, 2198, 2691, 3297, 3536, 6968), True),
    (14, 8, 29016, (117, 248, 3968, 5456, 7137, 8424, 8892), True),
    (14, 9, 54120, (55, 984, 4920, 8965, 19140, 19470, 20664), False),
    (14, 10, 113139, (117, 819, 967, 15444, 15472, 21274, 21294), False),
    (15, 2, 96, (1, 3, 5, 11, 24, 31, 39, 48), False),
    (15, 3, 448, (1, 10, 127, 150, 176, 189, 217, 224), True),
    (15, 4, 1100, (4, 64, 76, 116, 275, 344, 440, 550), False),
    (15, 5, 2880, (5, 45, 375, 576, 775, 895, 1152, 1440), False),
    (15, 6, 7488, (13, 117, 975, 1152, 1728, 2015, 2327, 3744), False),
    (15, 7, 17584, (16, 848, 1099, 3297, 3312, 4352, 8576, 8792), False),
    (15, 8, 39564, (36, 1099, 1908, 5495, 7452, 9792, 19296, 19782), False),
    (15, 9, 81900, (117, 585, 700, 11200, 15400, 23049, 26091, 40950), False),
    (15, 10, 154720, (160, 967, 1120, 4835, 21120, 29120, 29977, 77360), False),
]

# Printed sets that do not verify, with the repair used when seeding.  The
# 13840 graph is 5 x 2768: every generator must be a multiple of 5 or of 2768,
# and {1, a, 1072, 1080} on Z_2768 has diameter 8 only for a = 345.
ERRATA = {
    (10, 10, 13840): {
        "printed": (5, 1032, 2768, 5360, 5400),
        "corrected": (5, 1725, 2768, 5360, 5400),
    },
}

# Product rows whose printed factor cannot be right.  8 x 984 = 7872 and
# gcd(8, 984) = 8; the printed 7736-vertex set is the product with 967.
PRODUCT_ERRATA = {
    (11, 8, 7736): {"printed": (8, 6, 984), "corrected": (8, 6, 967)},
}


def product_rows(corrected: bool = True):
    """PRODUCT_TABLE rows, with the factor errata applied when ``corrected``."""
    for key, f1, f2 in PRODUCT_TABLE:
        fix = PRODUCT_ERRATA.get(key) if corrected else None
        if fix is not None:
            f1 = fix["corrected"] if f1 == fix["printed"] else f1
            f2 = fix["corrected"] if f2 == fix["printed"] else f2
        yield key, f1, f2
