"""Polytope facts from the MUB vertex sets, via scipy (qhull + linprog)."""
import itertools
import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull
from common import qutrit_alphas, paulis, family_eigvecs, two_qubit_mubs


def vertices(ops_basis, bases):
    out = []
    for v in bases:
        for k in range(v.shape[1]):
            e = v[:, k]
            out.append([np.real(e.conj() @ o @ e) for o in ops_basis])
    return np.array(out)


def edges(V):
    count = 0
    for i, j in itertools.combinations(range(len(V)), 2):
        mid = (V[i] + V[j]) / 2
        others = [k for k in range(len(V)) if k not in (i, j)]
        c = np.zeros(len(V))
        c[others] = -1
        A = np.vstack([V.T, np.ones(len(V))])
        b = np.append(mid, 1)
        r = linprog(c, A_eq=A, b_eq=b, bounds=[(0, None)] * len(V), method="highs")
        if -r.fun < 1e-9:
            count += 1
    return count


a = qutrit_alphas()
P = paulis()
cases = {
    "qubit": (P, [family_eigvecs([p]) for p in P]),
    "qutrit": (a, [family_eigvecs(a[2 * m:2 * m + 2]) for m in range(4)]),
}
for name, (ops, bases) in cases.items():
    V = vertices(ops, bases)
    hull = ConvexHull(V)
    print(f"{name}: vertices={len(V)} hull_vertices={len(hull.vertices)} facets={len(hull.simplices)} "
          f"edges={edges(V)}")
# n=4: operators from two-qubit Pauli eigenbases with Helmert spectra.
bases = two_qubit_mubs()
hel = [np.array([1, -1, 0, 0]), np.array([1, 1, -2, 0]), np.array([1, 1, 1, -3])]
hel = [h * np.sqrt(4 / (h @ h)) for h in hel]
ops = [sum(c[k] * np.outer(v[:, k], v[:, k].conj()) for k in range(4)) for v in bases for c in hel]
V = vertices(ops, bases)
print(f"n4: vertices={len(V)} norms2={sorted(set(np.round((V**2).sum(1), 9)))} edges={edges(V)}")
