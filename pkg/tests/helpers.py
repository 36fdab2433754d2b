"""Shared fixtures: deterministic random frame corpora and corrupted frames."""

import random
from math import gcd

from groupra.builders import build_cyclic_frame, cyclic_iso_record
from groupra.frames import Frame, IsoRecord
from groupra.groups import CosetSystem, make_cyclic


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def random_cyclic_spec(rng: random.Random, small: bool = False, multi_block: bool = False):
    """Orders plus a gcd-consistent kappa table, via one divisor t_x per group.

    kappa_xy = gcd(t_x, t_y) automatically satisfies the triple agreement
    condition: any common divisor of two of the gcds divides all three.
    """
    if small:
        count, max_order = rng.randint(1, 2), 6
    else:
        count, max_order = rng.randint(1, 4), 24
    while True:
        orders = [rng.randint(1, max_order) for _ in range(count)]
        if sum(orders) <= 100:
            break
    if multi_block and count >= 2:
        cut = rng.randint(1, count - 1)
        blocks = [range(cut), range(cut, count)]
    else:
        blocks = [range(count)]
    t = [rng.choice(divisors(n)) for n in orders]
    kappa = {}
    for block in blocks:
        for i in block:
            for j in block:
                if i < j:
                    kappa[(i, j)] = gcd(t[i], t[j])
    return orders, kappa


def cyclic_corpus() -> list[Frame]:
    """The running Z6/Z9 frame plus 25 seeded random cyclic frames."""
    frames = [build_cyclic_frame([6, 9], {(0, 1): 3})]
    rng = random.Random(20260823)
    for i in range(25):
        orders, kappa = random_cyclic_spec(
            rng, small=(i % 2 == 0), multi_block=(i % 5 == 4)
        )
        frames.append(build_cyclic_frame(orders, kappa))
    return frames


def multiblock_corpus() -> list[Frame]:
    """Ten frames with at least two blocks each."""
    frames = []
    rng = random.Random(97)
    while len(frames) < 10:
        orders, kappa = random_cyclic_spec(rng, multi_block=True)
        if len(orders) >= 2:
            frames.append(build_cyclic_frame(orders, kappa))
    return frames


def corrupt_map(base: Frame, pair: tuple[str, str], unit: int) -> Frame:
    """Reorder one stored K-system by the automorphism i -> unit*i of Z_kappa.

    Each record stays a genuine quotient isomorphism, so the constructor
    accepts the result, but the records no longer fit together.
    """
    record = base.isos[pair]
    kappa = record.kappa
    if gcd(unit, kappa) != 1 or unit % kappa == 1:
        raise ValueError(f"need a unit other than 1 mod {kappa}, got {unit}")
    shuffled = tuple(record.k.cosets[(unit * i) % kappa] for i in range(kappa))
    twisted = IsoRecord(
        record.x, record.y, record.h, CosetSystem(record.k.subgroup, shuffled)
    )
    isos = dict(base.isos)
    isos[pair] = twisted
    return Frame(base.groups, base.blocks, isos)


def corrupt_kappa(rng: random.Random) -> Frame:
    """Three cyclic groups with one quotient size out of step with the others.

    kappa_01 = kappa_02 = d but kappa_12 = d' < d, so the image of
    H_01*H_02 under the first map is strictly smaller than K_01*H_12.
    """
    d = rng.choice([4, 6, 8, 9])
    smaller = {4: 2, 6: 2, 8: 4, 9: 3}[d]
    orders = [d * rng.randint(1, 24 // d) for _ in range(3)]
    groups = {str(i): make_cyclic(n) for i, n in enumerate(orders)}
    isos = {
        ("0", "1"): cyclic_iso_record("0", "1", orders[0], orders[1], d),
        ("0", "2"): cyclic_iso_record("0", "2", orders[0], orders[2], d),
        ("1", "2"): cyclic_iso_record("1", "2", orders[1], orders[2], smaller),
    }
    return Frame(groups, [["0", "1", "2"]], isos)


def verdict_corpus() -> tuple[list[Frame], list[Frame]]:
    """80 sound frames and 20 corrupted ones for the checker-agreement sweep."""
    rng = random.Random(424242)
    sound = []
    for i in range(80):
        orders, kappa = random_cyclic_spec(
            rng, small=(i % 3 == 0), multi_block=(i % 5 == 0)
        )
        sound.append(build_cyclic_frame(orders, kappa))
    corrupted = []
    for _ in range(10):
        d = rng.choice([3, 4, 5, 6, 8, 9])
        units = [c for c in range(2, d) if gcd(c, d) == 1]
        orders = [d * rng.randint(1, 24 // d) for _ in range(3)]
        base = build_cyclic_frame(orders, {(i, j): d for i in range(3) for j in range(i + 1, 3)})
        pair = rng.choice([("0", "1"), ("0", "2"), ("1", "2")])
        corrupted.append(corrupt_map(base, pair, rng.choice(units)))
    for _ in range(10):
        corrupted.append(corrupt_kappa(rng))
    return sound, corrupted
