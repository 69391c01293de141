# %% [markdown]
# # Image homology and kernel cohomology of a pinched torus
#
# Gluing two antipodal points of a sphere gives a pinched torus N.  It has a
# loop through the pinch point, so H_1(N) has rank 1, but that loop is not in
# the image of intersection homology: IM_1(N) = 0 and KER^1(N) has rank 1.
# Two unrelated triangulations agree.

# %%
from ihtools import corpus
from ihtools.imcore import check_ideal, image_homology, kernel_cohomology, kernel_cohomology_via_iota, rank_table

for name in ("pinched_torus_icosa", "pinched_torus_quotient"):
    k = corpus.build(name).complex
    print(f"{name:24s} f={k.f_vector()}  {rank_table(k)}")

# %% [markdown]
# KER is computed as the annihilator of IM under the evaluation pairing, and
# independently by evaluating cocycles on the pushed intersection cycles.

# %%
n = corpus.pinched_torus_icosa()
for d in range(3):
    print(d, kernel_cohomology(n, d).subspace == kernel_cohomology_via_iota(n, d))

# %%
g = corpus.glued_spheres()
im2 = image_homology(g, 2)
print("glued spheres: IM_2 rank", im2.rank, "per component", {i: s.rank for i, s in im2.per_component_images.items()})
print("KER is an ideal:", check_ideal(g).passed)
