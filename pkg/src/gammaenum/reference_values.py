"""Frozen reference data for the verification suite.

The polynomial families below are published closed forms for the first few
members of the sequences this package computes; every entry is independently
cross-validated against the brute-force enumerators wherever the oracle caps
reach (see tests and the ``verify`` command).  Polynomials are stored factored
as ``scale * z^shift * (1+z)^shift_1pz * cofactor(z)`` to keep the data
reviewable, and expanded on demand.

Growth-rate constants carry a per-entry tolerance; the two entries marked
``known_mismatch`` document values from the same published table that are
inconsistent with the exact counting sequences (the brute-force oracle and
the coefficient ratios of the exact series both refute them; they correspond
to dropping the genus-1 term from the defining equation).  The verifier
reports them as failing checks rather than silently adjusting them.
"""

from __future__ import annotations

from .exact import Poly


def _expand(scale: int, z_shift: int, one_plus_z_power: int, cofactor: list[int]) -> Poly:
    poly = Poly(cofactor) * Poly([1, 1]).pow(one_plus_z_power)
    return poly.shift(z_shift).scale(scale)


# Q_g = scale * z^{2g} * cofactor(z); degree 3g-1, integer coefficients.
_Q_FACTORED = {
    1: (1, [1]),
    2: (21, [1, 1]),
    3: (11, [135, 558, 158]),
    4: (143, [1575, 13689, 18378, 2339]),
    5: (88179, [675, 9660, 28764, 18908, 1354]),
}

# I_g = scale * z^{2g} (1+z)^{2g} * cofactor(z); degree 6g-2.
_I_FACTORED = {
    1: (1, [1]),
    2: (1, [17, 92, 96]),
    3: (1, [1259, 15928, 61850, 92736, 47040]),
    4: (
        1,
        [200589, 4245684, 31264164, 107622740, 188262816, 161967360, 54333440],
    ),
    5: (
        1,
        [
            54766516,
            1681752448,
            19092044658,
            109184482584,
            353376676011,
            675135053568,
            753610999040,
            453941596160,
            113867919360,
        ],
    ),
    6: (
        3,
        [
            7613067765,
            312905543772,
            4932317894440,
            40797413383380,
            200964285178270,
            626595744773516,
            1268150755326432,
            1660845652501760,
            1357241056522240,
            628740761518080,
            126004558299136,
        ],
    ),
    7: (
        1,
        [
            13532959408258,
            706557271551408,
            14506513039164060,
            160434554727348896,
            1089075339931680039,
            4857650169218369856,
            14771712773087154704,
            31138771188689736192,
            45486763075779571200,
            45167296685229793280,
            29078583024627105792,
            10941912454886326272,
            1826131581135486976,
        ],
    ),
    8: (
        1,
        [
            10826939105517381,
            692156096364848676,
            17724869034206737356,
            249069951630509297956,
            2192230050291936695620,
            12980362620620450943588,
            53923920139564145104556,
            161060520394034807160164,
            349969438514715552162336,
            553647075623879302120960,
            630641488385967162351616,
            503519879227179011162112,
            267275771110990512783360,
            84670509266097640833024,
            12107536630199227514880,
        ],
    ),
}


def reference_Q(g: int) -> Poly:
    scale, cofactor = _Q_FACTORED[g]
    return Poly(cofactor).shift(2 * g).scale(scale)


def reference_I(g: int) -> Poly:
    scale, cofactor = _I_FACTORED[g]
    return _expand(scale, 2 * g, 2 * g, cofactor)


REFERENCE_Q_GENERA = tuple(sorted(_Q_FACTORED))
REFERENCE_I_GENERA = tuple(sorted(_I_FACTORED))

# Published growth-rate table for canonical structures, keyed (tau, gamma,
# with_one_arcs).  tolerance is absolute.  The two gamma=2 entries are
# refuted by the exact counts; correct values are given alongside.
GROWTH_TABLE = {
    (1, 1, False): {"value": "3.6005", "tol": "5e-5", "known_mismatch": False},
    (2, 1, False): {"value": "2.2759", "tol": "5e-5", "known_mismatch": False},
    (1, 2, False): {
        "value": "3.8846",
        "tol": "5e-5",
        "known_mismatch": True,
        "computed": "4.00342",
    },
    (2, 2, False): {
        "value": "2.3553",
        "tol": "5e-5",
        "known_mismatch": True,
        "computed": "2.38745",
    },
    (1, 1, True): {"value": "3.8782", "tol": "5e-5", "known_mismatch": False},
    (2, 1, True): {"value": "2.3361", "tol": "5e-5", "known_mismatch": False},
}
