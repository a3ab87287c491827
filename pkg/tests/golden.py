"""Reference vectors shared by the unit and acceptance tests."""

from fockcanon.combinat import Charge, parse_multipartition
from fockcanon.fockspace import FockVector
from fockcanon.laurentq import LaurentPoly


def vec(s, terms):
    """Build a vector from ``{"2,1|1": {exp: coeff}}``."""
    return FockVector(s, ((parse_multipartition(k), LaurentPoly(v)) for k, v in terms.items()))


S00 = Charge((0, 0), 2)

G_21_1 = {
    "2,1|1": {0: 1},
    "2|2": {1: 1},
    "2|1,1": {2: 1},
    "1,1|2": {2: 1},
    "1,1|1,1": {3: 1},
    "1|2,1": {4: 1},
}

A_4_EMPTY = {
    "4|-": {0: 1},
    "3,1|-": {1: 1},
    "2,1,1|-": {1: 1},
    "1,1,1,1|-": {2: 1},
    "2,1|1": {0: 1, 2: 1},
    "2|2": {1: 2},
    "2|1,1": {2: 2},
    "1,1|2": {2: 2},
    "1,1|1,1": {3: 2},
    "1|2,1": {2: 1, 4: 1},
    "-|4": {2: 1},
    "-|3,1": {3: 1},
    "-|2,1,1": {3: 1},
    "-|1,1,1,1": {4: 1},
}

G_4_EMPTY = {
    "4|-": {0: 1},
    "3,1|-": {1: 1},
    "2,1,1|-": {1: 1},
    "1,1,1,1|-": {2: 1},
    "2,1|1": {2: 1},
    "2|2": {1: 1},
    "2|1,1": {2: 1},
    "1,1|2": {2: 1},
    "1,1|1,1": {3: 1},
    "1|2,1": {2: 1},
    "-|4": {2: 1},
    "-|3,1": {3: 1},
    "-|2,1,1": {3: 1},
    "-|1,1,1,1": {4: 1},
}

# e = infinity, integer charge (0, 1, 0)
G_INF_21_E_1 = {
    "2,1|-|1": {0: 1},
    "1,1|1|1": {1: 1},
    "1,1|-|2": {2: 1},
    "2|-|1,1": {1: 1},
    "1|1|1,1": {2: 1},
    "1|-|2,1": {3: 1},
}
