# %% [markdown]
# # Functoriality: normalization versus collapse
#
# The normalization of the pinched torus (sphere -> N) carries IM onto IM.
# Collapsing a circle on a torus produces the same space up to homeomorphism
# but the map is not a model of an algebraic map, and IM is not preserved.

# %%
from ihtools import corpus
from ihtools.imcore import check_ker_pullback, check_pushforward

for name in ("normalization_map", "torus_collapse_map"):
    f = corpus.build(name).maps[0]
    print(f"{name} [{f.label}]")
    for d in range(3):
        push, pull = check_pushforward(f, d), check_ker_pullback(f, d)
        print(f"  d={d}: f_*IM rank {push.rank_pushed} into IM(Y) rank {push.rank_target}: "
              f"contained={push.contained} equal={push.equal}; preimage of KER equal={pull.preimage_equal}")
