#!/usr/bin/env python3
"""Brute-force convention check for the flat quaternionic model (n = 1).

Left multiplication on H = R^4 in basis (1, i, j, k); forms w(x, y) = <x, L y>;
SU(2) acts on forms by pullback rep^T . mat . rep. Decides which conjugation
(g u g^-1 or g^-1 u g) the form action realises and the sign of w_I.
"""
import numpy as np


def qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return np.array([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ])


def left(q):
    return np.stack([qmul(q, e) for e in np.eye(4)], axis=1)


def conj(q):
    return q * np.array([1, -1, -1, -1])


rng = np.random.default_rng(7)
wI = left(np.array([0, 1, 0, 0.0]))
print("w_I matrix:\n", wI)
print("w_I(e0,e1) =", wI[0, 1], "-> coefficient of dx0^dx1 is", wI[0, 1])
worst_a = worst_b = 0.0
for _ in range(20):
    g = rng.normal(size=4)
    g /= np.linalg.norm(g)
    u = np.concatenate([[0], rng.normal(size=3)])
    u /= np.linalg.norm(u)
    pulled = left(g).T @ left(u) @ left(g)
    a = left(qmul(conj(g), qmul(u, g)))  # g^-1 u g
    b = left(qmul(g, qmul(u, conj(g))))  # g u g^-1
    worst_a = max(worst_a, np.abs(pulled - a).max())
    worst_b = max(worst_b, np.abs(pulled - b).max())
print("max |pullback - L(conj(g) u g)| =", worst_a)
print("max |pullback - L(g u conj(g))| =", worst_b)
