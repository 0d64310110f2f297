import json
import os
import subprocess
import sys

import numpy as np

from fullab.kernels import _jit

PROBE = r"""
import json
import numpy as np
from fullab import sampling, spiral
from fullab.graph_core import canonical_code
from fullab.kernels import eigen
from fullab.kernels._jit import backend

a = np.random.default_rng(0).standard_normal((12, 12))
lam, ok = eigen.symmetric_eigenvalues(a + a.T)
vecs, rep = sampling.spiral_ar_vectors(sampling.SamplerConfig(28, seed=3, count=20))
chain = sampling.psw_chain(sampling.SamplerConfig(26, seed=1, method="psw_chain", steps=20000,
                                                  policy="energy", temperature=0.5))
print(json.dumps({
    "backend": backend(),
    "enum": [str(v) for v in spiral.enumerate_vectors(30)],
    "codes": [canonical_code(g).hex() for g in spiral.enumerate_isomers(28)],
    "eig": [float(x) for x in np.sort(lam)],
    "ar": [str(v) for v in vecs] + [rep.attempted],
    "chain": chain.report.as_dict(),
    "final": [list(nb) for nb in chain.final.rotation],
}))
"""


def _probe(disable: str) -> dict:
    env = dict(os.environ, FULLAB_DISABLE_NUMBA=disable)
    res = subprocess.run([sys.executable, "-c", PROBE], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def test_backends_agree():
    jit, py = _probe("0"), _probe("1")
    assert py["backend"] == "python"
    assert jit["backend"] in ("numba", "python")
    eig_j, eig_p = jit.pop("eig"), py.pop("eig")
    assert np.allclose(eig_j, eig_p, atol=1e-12)
    for key in ("backend",):
        jit.pop(key), py.pop(key)
    assert jit == py


def test_env_flag_parsing(monkeypatch):
    assert _jit.backend() in ("numba", "python")
    assert "" in _jit._FALSEY and "0" in _jit._FALSEY and "1" not in _jit._FALSEY
