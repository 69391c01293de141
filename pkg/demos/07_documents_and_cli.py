# %% [markdown]
# # JSON documents and the command line
#
# Complexes are exchanged as small JSON documents with string vertex names.
# The same computations are available from the `ihtools` command.

# %%
import json
import subprocess
import sys
import tempfile
from pathlib import Path

from ihtools.documents import complex_from_document

doc = {
    "name": "two-cones",
    "vertices": ["n", "s", "a", "b", "c"],
    "maximal_simplices": [["n", "a", "b"], ["n", "b", "c"], ["n", "a", "c"],
                          ["s", "a", "b"], ["s", "b", "c"], ["s", "a", "c"]],
    "stratification": [{"codim": 2, "simplices": [["n"], ["s"]]}],
}
lc = complex_from_document(doc)
print(lc.complex, lc.stratification())

# %%
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "pinched.json"
    cli = [sys.executable, "-m", "ihtools"]
    subprocess.run(cli + ["corpus", "pinched_torus_icosa", "--emit", str(path)], check=True)
    print(subprocess.run(cli + ["im", str(path)], capture_output=True, text=True).stdout)
    out = subprocess.run(cli + ["--format", "json", "ker", str(path)], capture_output=True, text=True).stdout
    print(json.loads(out)["degrees"])
