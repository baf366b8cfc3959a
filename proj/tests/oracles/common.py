"""Shared fixtures for the numpy/scipy oracles (independent of the C++ code)."""
import numpy as np

W3 = np.exp(2j * np.pi / 3)


def qutrit_alphas():
    w, s2 = W3, np.sqrt(2)
    a = [
        np.sqrt(1.5) * np.diag([1, 0, -1]),
        np.diag([1, -2, 1]) / s2,
        np.array([[0, -1j * w, 1j * w**2], [1j * w**2, 0, -1j * w], [-1j * w, 1j * w**2, 0]]) / s2,
        np.array([[0, -w, -w**2], [-w**2, 0, -w], [-w, -w**2, 0]]) / s2,
        np.array([[0, -1j, 1j * w**2], [1j, 0, -1j * w**2], [-1j * w, 1j * w, 0]]) / s2,
        np.array([[0, -1, -w**2], [-1, 0, -w**2], [-w, -w, 0]]) / s2,
        np.array([[0, -1j * w**2, 1j * w**2], [1j * w, 0, -1j], [-1j * w, 1j, 0]]) / s2,
        np.array([[0, -w**2, -w**2], [-w, 0, -1], [-w, -1, 0]]) / s2,
    ]
    return [x.astype(complex) for x in a]


def paulis():
    return [np.array([[0, 1], [1, 0]], complex),
            np.array([[0, -1j], [1j, 0]], complex),
            np.array([[1, 0], [0, -1]], complex)]


def family_eigvecs(ops):
    """Shared eigenbasis of a commuting family, via a generic combination."""
    rng = np.random.default_rng(12345)
    h = sum(rng.normal() * o for o in ops)
    _, v = np.linalg.eigh(h)
    return v


def prime_mubs(p):
    w = np.exp(2j * np.pi / p)
    bases = [np.eye(p, dtype=complex)]
    for a in range(1, p + 1):
        bases.append(np.array([[w ** ((a * k * k + j * k) % p) for j in range(p)]
                               for k in range(p)]) / np.sqrt(p))
    return bases


def two_qubit_mubs():
    """Five MUBs in C^4 from the standard partition of two-qubit Paulis."""
    I = np.eye(2)
    X, Y, Z = paulis()
    classes = [[(X, I), (I, X), (X, X)], [(Z, I), (I, Z), (Z, Z)], [(Y, I), (I, Y), (Y, Y)],
               [(X, Z), (Z, Y), (Y, X)], [(Z, X), (Y, Z), (X, Y)]]
    out = []
    for cls in classes:
        ops = [np.kron(a, b) for a, b in cls]
        out.append(family_eigvecs(ops))
    return out
