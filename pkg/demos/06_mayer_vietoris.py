# %% [markdown]
# # Mayer-Vietoris and image homology
#
# Two spheres glued crosswise at two pairs of points.  The cover by A = X - b
# and B = X - a (modelled by closed subcomplexes) gives an exact sequence in
# ordinary homology, while the restricted sequence of image homology is not
# exact at IM_0(A n B).

# %%
from ihtools import corpus
from ihtools.homology import exactness_defects, mv_sequence
from ihtools.imcore import mv_im_check

k = corpus.glued_spheres()
print("ordinary defects:", [d for _, d, _ in exactness_defects(mv_sequence(k, "A", "B"))])

# %%
for degree in (1, 2):
    r = mv_im_check(k, "A", "B", degree)
    print(f"degree {degree}: connecting rank {r.connecting_rank}, IM contained {r.contained}, "
          f"defect at IM_{degree - 1}(AnB) = {r.defect_at_intersection}")
