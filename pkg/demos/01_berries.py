# %% [markdown]
# # Berries: four conflicting reference classes
#
# An agent holds four batches of statistics about edible berries.  The
# berries at hand belong to all four classes and nothing is known about how
# the classes relate to each other.

# %%
from pathlib import Path

from evprob import answer_query, candidates_for, parse_kb

source = (Path(__file__).resolve().parents[1] / "data" / "berries.kb").read_text()
kb, warnings = parse_kb(source)

for c in candidates_for(kb, "berries", "Edible"):
    print(f"{c.cls:16s} {c.interval}")

# %% [markdown]
# `alg1` keeps every interval that was ever part of a conflict in play, so
# the only interval nobody challenges is the cover of everything.

# %%
r = answer_query(kb, "berries", "Edible", "alg1")
print("alg1     ", r.interval, sorted(r.reference_classes))

# %% [markdown]
# `alg2` drops an interval once it has produced its covers.  The region and
# soft-berry statistics are the narrowest ones and each is backed by a wider
# class that agrees with it, so their cover wins.

# %%
for alg in ("alg2", "alg2prime"):
    r = answer_query(kb, "berries", "Edible", alg)
    print(f"{alg:9s}", r.interval, sorted(r.reference_classes))
