"""Generators for syntactically valid, consistent knowledge-base files."""

import random
from fractions import Fraction

from hypothesis import strategies as st

CLASSES = ["A", "B", "C", "Red_1", "soft", "_x", "Region9"]
OBJECTS = ["o", "b1", "berries"]
TARGETS = ["T", "Edible"]


def number_literal(rng: random.Random, value: Fraction) -> str:
    """Spell ``value`` as a fraction, or as a decimal when it has a short one."""
    scaled = value * 10**9
    if scaled.denominator == 1 and rng.random() < 0.6:
        digits = rng.randint(len(str(value.denominator)) - 1, 9)
        while (value * 10**digits).denominator != 1:
            digits += 1
        whole, frac = divmod(int(value * 10**digits), 10**digits)
        return f"{whole}.{frac:0{digits}d}" if digits else str(whole)
    if rng.random() < 0.5:
        k = rng.randint(1, 4)
        return f"{value.numerator * k}/{value.denominator * k}"
    return f"{value.numerator}/{value.denominator}"


def random_kb_source(rng: random.Random) -> str:
    lines = []
    order = CLASSES[:]
    rng.shuffle(order)
    for _ in range(rng.randint(0, 5)):
        i, j = sorted(rng.sample(range(len(order)), 2))
        lines.append(f"subset {order[i]} {order[j]}")
    for _ in range(rng.randint(0, 5)):
        lines.append(f"member {rng.choice(OBJECTS)} {rng.choice(CLASSES)}")
    for t in TARGETS:
        for c in rng.sample(CLASSES, rng.randint(0, len(CLASSES))):
            d = rng.choice([1, 2, 3, 4, 5, 7, 8, 10, 16, 20, 60, 100, 1000, 1024])
            a, b = sorted((rng.randint(0, d), rng.randint(0, d)))
            lo, hi = Fraction(a, d), Fraction(b, d)
            gap = " " * rng.randint(0, 2)
            lines.append(f"stat {t} {c} [{number_literal(rng, lo)},{gap}{number_literal(rng, hi)}]")
    for _ in range(rng.randint(0, 2)):
        lines.append(f"query {rng.choice(OBJECTS)} {rng.choice(TARGETS)}")
    if rng.random() < 0.3:
        lines.append("# trailing comment")
    rng.shuffle(lines)
    return "\n".join(lines) + "\n"


@st.composite
def kb_sources(draw):
    return random_kb_source(random.Random(draw(st.integers(0, 2**32))))
