import random

from hypothesis import strategies as st

from spehseries import HalfExp, Multisegment, Segment


@st.composite
def segments(draw, lo=-6, hi=6, max_card=5, line="rho"):
    size = draw(st.integers(1, max_card))
    # doubled beginning; the whole segment must fit in [lo, hi]
    b2 = draw(st.integers(2 * lo, 2 * (hi - size + 1)))
    return Segment(line, HalfExp(b2), HalfExp(b2 + 2 * (size - 1)))


@st.composite
def integral_segments(draw, lo=-6, hi=6, max_card=5):
    size = draw(st.integers(1, max_card))
    b = draw(st.integers(lo, hi - size + 1))
    return Segment("rho", HalfExp(2 * b), HalfExp(2 * (b + size - 1)))


def multisegments(max_size=6, seg=None):
    return st.lists(seg if seg is not None else segments(), min_size=0, max_size=max_size).map(Multisegment)


def random_corpus(count, seed=2024, max_size=6, max_card=5, lo=-6, hi=6):
    """Plain-random multisegments, reproducible from the seed."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        segs = []
        for _ in range(rng.randint(1, max_size)):
            size = rng.randint(1, max_card)
            b2 = rng.randint(2 * lo, 2 * (hi - size + 1))
            segs.append(Segment("rho", HalfExp(b2), HalfExp(b2 + 2 * (size - 1))))
        out.append(Multisegment(segs))
    return out
