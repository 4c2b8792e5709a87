# %% [markdown]
# # Watching the cover loops pass by pass
#
# `[0.3,0.4] [0,0.5] [0.4,0.7] [0.4,1]`: two narrow intervals, each nested
# in a wide one that conflicts with the other narrow one.

# %%
from evprob import parse_interval_list, resolve_alg1, resolve_alg2, resolve_alg2prime

xs = parse_interval_list("[0.3,0.4] [0,0.5] [0.4,0.7] [0.4,1]")


def show(result):
    print(f"{result.algorithm}: {result.interval}")
    for step in result.trace:
        gen = " ".join(str(t.interval) for t in step.generated)
        work = " ".join(str(t.interval) + ("*" if t.marked else "") for t in step.surviving)
        print(f"  pass {step.iteration}: generated {gen}")
        print(f"          working set {work}")


# %% [markdown]
# In `alg1` the wide original `[0, 0.5]` is still around in pass 2 and
# conflicts with `[0.3, 0.7]`, so that cover gets marked (`*`) and only
# `[0, 1]` survives unmarked.

# %%
show(resolve_alg1(xs))

# %% [markdown]
# `alg2` forgets the originals after pass 1.  `[0.3, 0.7]` then nests in
# every remaining cover and is returned.

# %%
show(resolve_alg2(xs))

# %% [markdown]
# The sweep picks `[0.3, 0.4]`, discards what agrees with it, then picks
# `[0.4, 0.7]`; the answer is the cover of those picks.

# %%
show(resolve_alg2prime(xs))
