"""The concrete identity suite shared by the module and acceptance tests.

Each builder returns the polynomial whose vanishing (or membership) the
toolkit is expected to certify.  Variables are numbered so every polynomial
is multilinear or multihomogeneous exactly as tested.
"""

import itertools

from weakid.freealg import NcPoly, circ, comm, left_normed, perm_sign
from weakid.series import degree6_relations

x = [None] + [NcPoly.variable(i) for i in range(1, 9)]


def pfaffian_identity():
    """Alternating sum of commutator products with the last slot fixed:
    sum over Sym(3) of sgn(s) [x_{s(1)}, x_{s(2)}] [x_{s(3)}, x4]."""
    acc = NcPoly.zero()
    for p in itertools.permutations((1, 2, 3)):
        acc = acc + perm_sign(p) * (comm(x[p[0]], x[p[1]]) * comm(x[p[2]], x[4]))
    return acc


def pfaffian_identity_full():
    """Fully alternating variant: sum over Sym(4) of
    sgn(s) [x_{s(1)}, x_{s(2)}] [x_{s(3)}, x_{s(4)}]."""
    acc = NcPoly.zero()
    for p in itertools.permutations((1, 2, 3, 4)):
        acc = acc + perm_sign(p) * (comm(x[p[0]], x[p[1]]) * comm(x[p[2]], x[p[3]]))
    return acc


def circle_commutator_identity():
    """[x1, x2] o [x3, x4, x1] (multihomogeneous, degree 5)."""
    return circ(comm(x[1], x[2]), left_normed(x[3], x[4], x[1]))


def two_var_degree5_identity():
    """[x2, x1, x1] o [x2, x1]."""
    return circ(left_normed(x[2], x[1], x[1]), comm(x[2], x[1]))


def sandwiched_rearrangement_identity():
    """[x1,x3] y [x2,x4] - [x2,x3] y [x1,x4] - [x1,x2] y [x3,x4] with y = x5."""
    return (comm(x[1], x[3]) * x[5] * comm(x[2], x[4])
            - comm(x[2], x[3]) * x[5] * comm(x[1], x[4])
            - comm(x[1], x[2]) * x[5] * comm(x[3], x[4]))


def rearrangement_identity():
    """[x1,x3][x2,x4] - [x2,x3][x1,x4] - [x1,x2][x3,x4]."""
    return (comm(x[1], x[3]) * comm(x[2], x[4])
            - comm(x[2], x[3]) * comm(x[1], x[4])
            - comm(x[1], x[2]) * comm(x[3], x[4]))


def three_alternating_identity():
    """[x1,x2,x4][x3,x5] - [x1,x3,x4][x2,x5] + [x2,x3,x4][x1,x5]."""
    return (left_normed(x[1], x[2], x[4]) * comm(x[3], x[5])
            - left_normed(x[1], x[3], x[4]) * comm(x[2], x[5])
            + left_normed(x[2], x[3], x[4]) * comm(x[1], x[5]))


def even_even_commute_identity():
    """[x1,x2,x3,x4][x5,x6] - [x5,x6][x1,x2,x3,x4]."""
    long = left_normed(x[1], x[2], x[3], x[4])
    short = comm(x[5], x[6])
    return long * short - short * long


def even_odd_anticommute_identity():
    """[x1,x2][x3,x4,x5] + [x3,x4,x5][x1,x2]."""
    even = comm(x[1], x[2])
    odd = left_normed(x[3], x[4], x[5])
    return even * odd + odd * even


def capelli_instance():
    """4-alternating weak Capelli polynomial:
    sum over Sym(4) of sgn(s) x_{s(1)} y1 x_{s(2)} y2 x_{s(3)} y3 x_{s(4)},
    with y1, y2, y3 = x5, x6, x7."""
    acc = NcPoly.zero()
    for p in itertools.permutations((1, 2, 3, 4)):
        acc = acc + perm_sign(p) * (
            x[p[0]] * x[5] * x[p[1]] * x[6] * x[p[2]] * x[7] * x[p[3]])
    return acc


def odd_odd_product():
    """[x1,x2,x3][x4,x5,x6]: reducible to even-length commutator products
    modulo the weak T-ideal, but not itself a weak identity."""
    return left_normed(x[1], x[2], x[3]) * left_normed(x[4], x[5], x[6])


def bracket_pair_relation():
    return degree6_relations()[0]


def square_relation():
    return degree6_relations()[1]


def cube_relation():
    return degree6_relations()[2]
