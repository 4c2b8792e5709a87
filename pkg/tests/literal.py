"""Direct transcriptions of the pairwise-cover loops, on Interval objects.

No integer rescaling, no incremental pair skipping.  Used only to check the
optimised versions in ``evprob.resolution``.
"""

from evprob.interval import conflicts, cover, narrowest


def literal_alg1(intervals):
    work = set(intervals)
    marked = set()
    first_pass = None
    while True:
        produced = set()
        for a in work:
            for b in work:
                if a != b and conflicts(a, b):
                    produced.add(cover(a, b))
                    marked |= {a, b}
        if first_pass is None:
            first_pass = set(produced)
        grew = not produced <= work
        work |= produced
        if not grew:
            break
    return narrowest(work - marked), first_pass


def literal_alg2(intervals):
    work = set(intervals)
    while True:
        produced, marked = set(), set()
        for a in work:
            for b in work:
                if a != b and conflicts(a, b):
                    produced.add(cover(a, b))
                    marked |= {a, b}
        if not produced:
            return narrowest(work)
        work = (work - marked) | produced
