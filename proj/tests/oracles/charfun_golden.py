"""Margenau-Hill vs classical characteristic function at fixed points (scipy expm)."""
import itertools
import numpy as np
from scipy.linalg import expm
from common import qutrit_alphas, paulis, family_eigvecs


def mh(rho, fams, t):
    exps = [expm(1j * sum(tj * op for tj, op in zip(tf, ops))) for ops, tf in zip(fams, t)]
    tot = 0
    perms = list(itertools.permutations(range(len(exps))))
    for p in perms:
        u = np.eye(rho.shape[0], dtype=complex)
        for k in p:
            u = u @ exps[k]
        tot += np.trace(rho @ u)
    return tot / len(perms)


def classical(rho, fams, t):
    n = rho.shape[0]
    tables = []
    for ops in fams:
        v = family_eigvecs(ops)
        tables.append([[np.real(v[:, k].conj() @ o @ v[:, k]) for o in ops] for k in range(n)])
    tot = 0
    for lam in itertools.product(range(n), repeat=len(fams)):
        p, ph = 1.0, 0.0
        for m, k in enumerate(lam):
            z = tables[m][k]
            p += sum(zj * np.real(np.trace(rho @ o)) for zj, o in zip(z, fams[m]))
            ph += sum(zj * tj for zj, tj in zip(z, t[m]))
        tot += p / n ** len(fams) * np.exp(1j * ph)
    return tot


a = qutrit_alphas()
qf = [a[2 * m:2 * m + 2] for m in range(4)]
tq = [(0.3, -0.7), (1.1, 0.2), (-0.5, 0.9), (-1.3, 0.4)]
for name, rho in [("mixed", np.eye(3) / 3), ("e0", np.diag([1, 0, 0]).astype(complex))]:
    q, c = mh(rho, qf, tq), classical(rho, qf, tq)
    print(f"qutrit {name}: mh=({q.real:.15g},{q.imag:.15g}) cl=({c.real:.15g},{c.imag:.15g}) |d|={abs(q - c):.6g}")
pf = [[p] for p in paulis()]
rho = np.array([[0.7, 0.2 - 0.1j], [0.2 + 0.1j, 0.3]])
tp = [(0.4,), (-1.2,), (2.0,)]
q, c = mh(rho, pf, tp), classical(rho, pf, tp)
print(f"qubit: mh=({q.real:.15g},{q.imag:.15g}) cl=({c.real:.15g},{c.imag:.15g}) |d|={abs(q - c):.3g}")
