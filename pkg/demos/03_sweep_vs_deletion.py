# %% [markdown]
# # Where the deletion loop and the sweep part ways
#
# The greedy sweep always agrees with an exhaustive search for the
# narrowest admissible cover.  The deletion loop (`alg2`) usually does too,
# but not when two wide intervals that share a narrow core also conflict
# with each other.

# %%
import itertools
from fractions import Fraction

from evprob import Interval, oracle_resolve, parse_interval_list, resolve_alg2, resolve_alg2prime

xs = parse_interval_list("[0.45,0.5] [0.3,0.55] [0.4,0.9] [0,0.1]")
for fn in (resolve_alg2, resolve_alg2prime, oracle_resolve):
    print(f"{fn.__name__:18s} {fn(xs).interval}")

# %% [markdown]
# Pass 1 of `alg2` covers `[0.3,0.55]` with `[0.4,0.9]`, producing
# `[0.3,0.9]`.  The core `[0.45,0.5]` is deleted along with everything
# else, and `[0.3,0.9]` then clashes with `[0,0.5]`.

# %%
for step in resolve_alg2(xs).trace:
    print(step.iteration, [str(t.interval) for t in step.surviving])

# %% [markdown]
# How often does this happen on small inputs?  Enumerate every multiset of
# up to four intervals with endpoints in sixths.

# %%
grid = [Fraction(i, 6) for i in range(7)]
ivs = [Interval(a, b) for a in grid for b in grid if a <= b]
total = differ = 0
for k in range(1, 5):
    for ms in itertools.combinations_with_replacement(ivs, k):
        total += 1
        differ += resolve_alg2(ms).interval != resolve_alg2prime(ms).interval
print(f"{differ} of {total} multisets differ")
