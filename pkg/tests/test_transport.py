"""Transport of the chain map F through psi.

F on the Taft tensor square equals F on the x-part composed with psi, with
the group coefficient riding along.  On raw pairs with group parts this is a
genuine identity about how augmentations commute with the transport, in both
the untwisted bookkeeping (as displayed in the construction) and the twisted
one (the bimodule-equivariant structure).
"""

import random
from itertools import product

import pytest

from gerstenhaber.diagonal import psi_apply
from gerstenhaber.resolution import f_map, f_map_raw
from gerstenhaber.scalars import CycScalar


def _check_raw_key(p, dl, dr, key, twisted):
    raw = {key: CycScalar.one(p)}
    lhs = f_map_raw(p, dl, dr, raw, twisted=twisted)
    rhs = f_map(psi_apply(p, dl, dr, raw, twisted=twisted))
    assert lhs == rhs, (p, dl, dr, key, twisted)


@pytest.mark.parametrize("twisted", [False, True])
def test_transport_identity_exhaustive_p3(twisted):
    p = 3
    for dl in range(7):
        for dr in range(7 - dl):
            for key in product(range(p), repeat=6):
                _check_raw_key(p, dl, dr, key, twisted)


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("twisted", [False, True])
def test_transport_identity_sampled(p, twisted):
    rng = random.Random(100 + p)
    degree_pairs = [(dl, dr) for dl in range(7) for dr in range(7 - dl)]
    for dl, dr in degree_pairs:
        for _ in range(40):
            key = tuple(rng.randrange(p) for _ in range(6))
            _check_raw_key(p, dl, dr, key, twisted)
