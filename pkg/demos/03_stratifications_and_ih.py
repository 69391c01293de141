# %% [markdown]
# # Stratifications and intersection homology
#
# The suspension of a torus is a 3-dimensional pseudomanifold with two
# singular points (the suspension poles).  Its intersection homology depends
# on the perversity, and the two middle perversities are dual to each other.

# %%
from ihtools import corpus
from ihtools.homology import betti_numbers
from ihtools.imcore import intersection_homology
from ihtools.stratify import canonical_stratification, parse_perversity

k = corpus.susp_torus()
s = canonical_stratification(k)
print(s)
print("ordinary homology", betti_numbers(k))

# %%
for name in ("zero", "middle", "upper-middle", "top"):
    p = parse_perversity(name, 3)
    ranks = [intersection_homology(s, p, d).rank for d in range(4)]
    print(f"{name:13s} p={p.as_tuple()}  IH={ranks}")

# %% [markdown]
# A hand-chosen stratification that is not full is handled by one barycentric
# subdivision; the stratification keeps a map back to the original complex.

# %%
from ihtools.stratify import make_stratification

oct_ = corpus.octahedron()
s2 = make_stratification(oct_, {2: [("N",), ("e0",)]})
print(s2, "parent map:", s2.parent_map is not None)
