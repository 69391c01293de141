# %% [markdown]
# # Simplicial homology, cohomology and cup products
#
# The 7-vertex torus is the smallest triangulated torus.  We compute its Betti
# numbers, cycle representatives and the cup product pairing on H^1.

# %%
from ihtools import corpus
from ihtools.homology import cohomology, cup_product, homology, pairing_matrix

t = corpus.csaszar_torus()
print(t, "f-vector", t.f_vector(), "chi", t.euler_characteristic())
print("Betti", [homology(t, d).rank for d in range(3)])

# %%
h1 = homology(t, 1)
for z in h1.representatives:
    print("cycle with", len(z.coefficients), "edges")

# %% [markdown]
# Cohomology representatives pair perfectly with homology representatives.

# %%
print(pairing_matrix(h1, cohomology(t, 1)).to_dense())

# %%
a, b = cohomology(t, 1).representatives
h2 = cohomology(t, 2)
print("a.a =", h2.coordinates(cup_product(a, a)), " a.b =", h2.coordinates(cup_product(a, b)),
      " b.a =", h2.coordinates(cup_product(b, a)))
