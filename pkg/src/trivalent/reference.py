"""Reference values for self-verification.

Subgroup counts of the modular group by index are OEIS A005133; conjugacy
class counts are OEIS A121350.  The first fifty terms of each and the two
index-500 values are frozen here so the self-test can cross-check every
pipeline against independently known data.
"""

#: A005133: number of index-n subgroups of the modular group, n = 1..50.
SUBGROUPS_BY_INDEX = (
    1, 1, 4, 8, 5, 22, 42, 40, 120, 265, 286, 764, 1729, 2198, 5168,
    12144, 17034, 37702, 88958, 136584, 288270, 682572, 1118996, 2306464,
    5428800, 9409517, 19103988, 44701696, 80904113, 163344502, 379249288,
    711598944, 1434840718, 3308997062, 6391673638, 12921383032,
    29611074174, 58602591708, 119001063028, 271331133136, 547872065136,
    1119204224666, 2541384297716, 5219606253184, 10733985041978,
    24300914061436, 50635071045768, 104875736986272, 236934212877684,
    499877970985660,
)

#: A121350: number of conjugacy classes of index-n subgroups, n = 1..50.
CONJUGACY_CLASSES_BY_INDEX = (
    1, 1, 2, 2, 1, 8, 6, 7, 14, 27, 26, 80, 133, 170, 348, 765, 1002,
    2176, 4682, 6931, 13740, 31085, 48652, 96682, 217152, 362779, 707590,
    1597130, 2789797, 5449439, 12233848, 22245655, 43480188, 97330468,
    182619250, 358968639, 800299302, 1542254973, 3051310056, 6783358130,
    13362733296, 26648120027, 59101960412, 118628268978, 238533003938,
    528281671324, 1077341937144, 2184915316390, 4835392099548,
    9997568771074,
)

#: Index-500 term of A005133 (226 digits).
SUBGROUPS_INDEX_500 = int(
    "129430367485890696501112403782149140632007458406669818924"
    "049655237581302432985235983195547225893573668769081095237"
    "520334045385563837477539980582454212848418771007253898122"
    "98261906049050179891685415479424"
)

#: Index-500 term of A121350 (225 digits).
CONJUGACY_CLASSES_INDEX_500 = int(
    "258860734971781393002224807564298281264014916813339637848"
    "099310475162604865970471966391094451787371816235545381100"
    "065419026649727056066352318775170749619149459628751242388"
    "57108849306258234323621889976"
)
