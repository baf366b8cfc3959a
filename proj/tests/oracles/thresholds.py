"""Exhaustive scan of the global-POVM face operators S = n*sum_m P_m - (n+1) I.

Prints the worst (most negative) minimum eigenvalue and the resulting
critical unsharpness 1/max(-min eig) for n = 2, 3, 4, 5.
"""
import itertools
import numpy as np
from common import qutrit_alphas, paulis, family_eigvecs, prime_mubs, two_qubit_mubs


def worst(bases):
    n = bases[0].shape[0]
    best, arg = 0.0, None
    for lam in itertools.product(range(n), repeat=len(bases)):
        s = -(len(bases)) * np.eye(n, dtype=complex)
        for m, k in enumerate(lam):
            v = bases[m][:, k]
            s += n * np.outer(v, v.conj())
        e = np.linalg.eigvalsh(s).min()
        if -e > best:
            best, arg = -e, lam
    return best, arg


a = qutrit_alphas()
cases = {
    "qubit": [family_eigvecs([p]) for p in paulis()],
    "qutrit": [family_eigvecs(a[2 * m:2 * m + 2]) for m in range(4)],
    "n4": two_qubit_mubs(),
    "n5": prime_mubs(5),
}
for name, bases in cases.items():
    n = bases[0].shape[0]
    cross = max(np.abs(np.abs(bases[i].conj().T @ bases[j]) ** 2 - 1 / n).max()
                for i in range(len(bases)) for j in range(i + 1, len(bases)))
    w, lam = worst(bases)
    print(f"{name}: unbiased_dev={cross:.2e} worst_min_eig={-w:.15g} eta*={1 / w:.15g} "
          f"1/sqrt(N)={1 / np.sqrt(n * n - 1):.15g}")
