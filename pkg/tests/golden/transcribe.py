"""Regenerate the golden coefficient files.

Every expression here is transcribed literally from the reference
identities for the worked low-rank cases and evaluated with qarith
scalar arithmetic only — independently of so_complete / lift_closed,
which the acceptance suite byte-compares against these files.

Run:  python3 tests/golden/transcribe.py
"""

import os

from qborel.qarith import CycloCtx
from qborel.lifting import GroupAlgElem, LiftRelation, MuPoly

HERE = os.path.dirname(os.path.abspath(__file__))
N = 11


def write(name, text):
    with open(os.path.join(HERE, name), "w") as fh:
        fh.write(text)


def mu(ctx, i, j):
    return MuPoly.symbol(ctx, (i, j))


def half(ctx):
    from fractions import Fraction
    return MuPoly.const(ctx, Fraction(1, 2))


def b2_entries(ctx):
    # theta = 2, grid n = 5; eta = (q^2-1)^N
    eta = MuPoly.const(ctx, (ctx.q() * ctx.q() - ctx.one()) ** N)
    r23 = -(eta * mu(ctx, 2, 3))
    r24 = -(half(ctx) * eta * eta * mu(ctx, 2, 3) * mu(ctx, 2, 3))
    return ("r_23 = %s\nr_24 = %s\n" % (r23, r24))


def b2_relation(ctx):
    # x_(14)^N = mu_14 (g1 g2^2)^N - (q^2-1)^N (q-1)^N mu_23^2 x_(12)^N
    #            - 2 (q-1)^N mu_23 x_(13)^N
    q, one = ctx.q(), ctx.one()
    g = GroupAlgElem(ctx, {(1, 2): mu(ctx, 1, 4)})
    e = GroupAlgElem(ctx, {(0, 0): mu(ctx, 1, 4)})
    c12 = -(MuPoly.const(ctx, ((q * q - one) ** N) * ((q - one) ** N))
            * mu(ctx, 2, 3) * mu(ctx, 2, 3))
    c13 = -(MuPoly.const(ctx, ctx.from_int(2) * (q - one) ** N)
            * mu(ctx, 2, 3))
    rel = LiftRelation("B", 2, (1, 4), g - e, {(1, 2): c12, (1, 3): c13})
    return str(rel) + "\n"


def b3_identities(ctx):
    # theta = 3, grid n = 7.  Seed values (eta = (q^2-1)^N; the long
    # seeds carry the half-power factor):
    #   r_67 = eta mu_12   r_56 = eta mu_23   r_45 = eta mu_34
    #   r_46 = eta mu_24   r_57 = eta mu_13   r_47 = eta mu_14
    #   r_36 = -(1/2) eta (q+1)^N mu_25
    q, one = ctx.q(), ctx.one()
    eta = MuPoly.const(ctx, (q * q - one) ** N)
    r45 = eta * mu(ctx, 3, 4)
    r46 = eta * mu(ctx, 2, 4)
    r56 = eta * mu(ctx, 2, 3)
    r36 = -(half(ctx) * eta * MuPoly.const(ctx, (q + one) ** N)
            * mu(ctx, 2, 5))
    lines = [
        "r_35 = %s" % -(half(ctx) * r45 * r45),
        "r_34 = %s" % -r45,
        "r_26 = %s" % (-(half(ctx) * r46 * r46) - r36 * r56),
        "r_25 = %s" % (-r36 - r45 * r46 + half(ctx) * r45 * r45 * r56),
        "r_24 = %s" % (-r46 + r45 * r56),
        "r_23 = %s" % -r56,
    ]
    return "\n".join(lines) + "\n"


def d5_entries(ctx):
    # theta = 5, grid n = 10; primes j' = 11 - j, so mu_45' = mu_(4,6),
    # mu_35' = mu_(3,6), mu_34' = mu_(3,7)
    eta = MuPoly.const(ctx, (ctx.q() * ctx.q() - ctx.one()) ** N)
    m34, m45, m35 = mu(ctx, 3, 4), mu(ctx, 4, 5), mu(ctx, 3, 5)
    m45p, m35p, m34p = mu(ctx, 4, 6), mu(ctx, 3, 6), mu(ctx, 3, 7)
    lines = [
        "r_35 = %s" % (eta * eta * m34 * m45 - eta * m35),
        "r_36 = %s" % (eta * eta * m34 * m45p - eta * m35p),
        "r_37 = %s" % (eta * m34p - eta * eta * m35 * m45p
                       - eta * eta * m35p * m45 + eta * eta * eta
                       * m34 * m45 * m45p),
        "r_38 = %s" % (eta * eta * m34p * m34 - eta * eta * m35p * m35),
    ]
    return "\n".join(lines) + "\n"


def main():
    ctx = CycloCtx(N)
    write("b2_entries.txt", b2_entries(ctx))
    write("b2_relation_14.txt", b2_relation(ctx))
    write("b3_identities.txt", b3_identities(ctx))
    write("d5_entries.txt", d5_entries(ctx))
    print("golden files written to", HERE)


if __name__ == "__main__":
    main()
