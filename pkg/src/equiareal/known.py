"""Published values used as golden data: points, generators, relation
matrices and regulators for the t = 4 curve and for E_2."""
from fractions import Fraction as F

T4_A4 = F(-1617508083022593897795364438996422549375, 4)
T4_SIXTEEN_AREA_SQ = 1617508083022593897795364438996422549375
T4_POINTS = (
    (20626479356354560000, 20849350546566884379967280000),
    (23113550675916619776, 54786013676180111350031745024),
    (29822503524802560000, -120266596559434914904320720000),
    (41748877998578260224, 236399461657400030514050179368),
    (85488908030849440000, 768253474718253155853728585000),
)
T4_REGULATOR = "122787391.171313"
T4_ROOTS = ((63232, 71825, 76032), (104593, 61776, 88400))
T3_2_ROOTS = ((732, 804, 342), (293, 513, 536))

E2_A4 = 2624072905728
E2_TORSION = "Z/2Z"
E2_POINTS = (
    (123121216, 1366271251712),
    (9400356, -29246291928),
    (10188864, -32931327744),
    (1382976, -2504823552),
    (1132096, 2102770432),
)
E2_GENERATORS = (
    (680800, 1449831680),
    (981088, 1875840256),
    (F(240126016, 49), F(3919014764288, 343)),
    (55264356, -411011675928),
    (123121216, -1366271251712),
)
E2_REGULATOR = "123017.788734562"

# rows: P1..P5 in terms of G1..G5
E2_RELATIONS = (
    (0, 0, 0, 0, -1),
    (-2, -2, 1, 1, -1),
    (0, 0, -1, -1, 0),
    (-2, -2, 0, 1, -1),
    (0, -2, -1, 0, -1),
)
# rows: P1, P2*, P3, P4*, P5* in terms of G1..G5
E2_STARRED_RELATIONS = (
    (0, 0, 0, 0, -1),
    (-1, -1, 1, 1, -1),
    (0, 0, -1, -1, 0),
    (-1, -1, 0, 1, -1),
    (0, -1, -1, 0, -1),
)

HIGH_RANK_T = {
    9: (F(-11, 14), F(2, 9)),
    8: (F(-4, 21), F(-12, 13), F(-9, 13), F(-7, 9), F(-7, 8), F(-1, 8), F(-3, 7), F(-1, 4), F(1, 12)),
}
