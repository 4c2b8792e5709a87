# %% [markdown]
# # Known subclasses settle conflicts before resolution runs
#
# If the red berries with statistics are known to be soft berries too, the
# conflicting soft-berry figure is simply dropped.

# %%
from evprob import answer_query, parse_kb

kb, _ = parse_kb(
    """
    member berries RedBerries
    member berries SoftBerries
    subset RedBerries SoftBerries
    stat Edible RedBerries [0.70, 0.90]
    stat Edible SoftBerries [0.35, 0.45]
    """
)
r = answer_query(kb, "berries", "Edible")
print(r.interval, r.status, "dropped:", sorted(r.dropped_by_dominance))

# %% [markdown]
# Membership is chained through subsets: an object asserted to be in
# `RedBerries` is also in `SoftBerries` here.

# %%
kb, _ = parse_kb("member b2 RedBerries\nsubset RedBerries SoftBerries\n")
print(sorted(kb.classes_of("b2")))
