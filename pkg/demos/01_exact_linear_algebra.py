# %% [markdown]
# # Exact linear algebra over Q
#
# Everything downstream (homology, intersection homology, the IM and KER
# subspaces) is built from a handful of exact operations on sparse rational
# matrices and canonical subspaces.

# %%
from fractions import Fraction

from ihtools.exactla import QMatrix, Subspace, annihilator, kernel_basis, preimage, rank

m = QMatrix.from_dense([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
print("rank", rank(m))
ker = kernel_basis(m)
print("kernel", ker.dense_vectors())

# %% [markdown]
# Subspaces are stored in reduced echelon form, so two spans of the same space
# compare equal without any tolerance.

# %%
a = Subspace.span(3, [[1, 1, 0], [0, 1, 1]])
b = Subspace.span(3, [[2, 0, -2], [1, 2, 1]])
print(a == b, a.pivots)

# %%
third = Fraction(1, 3)
s = Subspace.span(4, [[third, 0, 1, 0]])
ann = annihilator(s)
print("annihilator has dim", ann.rank, "and Ann(Ann(s)) == s:", annihilator(ann) == s)

# %%
proj = QMatrix.from_dense([[1, 0, 0], [0, 1, 0]])
print("preimage of the x-axis under projection:", preimage(proj, Subspace.span(2, [[1, 0]])).dense_vectors())
