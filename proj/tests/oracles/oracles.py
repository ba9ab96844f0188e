"""Independent reference values for the C++ tests (numpy/scipy/cvxpy)."""
import itertools
import math

import cvxpy as cp
import numpy as np


def det_vector(n, a=0.37, b=0.91):
    k = np.arange(n)
    v = np.cos(a * k + 0.1) + 1j * np.sin(b * k * k + 0.3)
    return v / np.linalg.norm(v)


def ptrace(rho, dims, keep):
    n = len(dims)
    r = rho.reshape(dims + dims)
    drop = [i for i in range(n) if i not in keep]
    for cnt, i in enumerate(sorted(drop, reverse=True)):
        m = r.ndim // 2
        r = np.trace(r, axis1=i, axis2=i + m)
    d = int(np.prod([dims[i] for i in keep]))
    return r.reshape(d, d)


def mpow(m, p):
    w, v = np.linalg.eigh(m)
    w = np.clip(w, 0, None)
    wp = np.where(w > 1e-14, w ** p, 0)
    return (v * wp) @ v.conj().T


def hmin_rel(rho, sigma, dA):
    s = np.kron(np.eye(dA), mpow(sigma, -0.5))
    return -math.log2(np.linalg.eigvalsh(s @ rho @ s).max())


def h2_rel(rho, sigma, dA):
    s = np.kron(np.eye(dA), mpow(sigma, -0.25))
    m = s @ rho @ s
    return -math.log2(np.real(np.trace(m @ m)))


def hmin_cond_sdp(rho, dA, dB):
    sig = cp.Variable((dB, dB), hermitian=True)
    cons = [cp.kron(np.eye(dA), sig) - rho >> 0]
    prob = cp.Problem(cp.Minimize(cp.real(cp.trace(sig))), cons)
    prob.solve(solver=cp.SCS, eps=1e-10, max_iters=200000)
    return -math.log2(prob.value)


def vn(rho):
    w = np.linalg.eigvalsh(rho)
    w = w[w > 1e-15]
    return float(-(w * np.log2(w)).sum())


def fidelity(r, s):
    sr = mpow(r, 0.5)
    return float(np.real(np.trace(mpow(sr @ s @ sr, 0.5))))


print("# state: A=2,B=3,E=2 from det_vector(12)")
psi = det_vector(12)
rho = np.outer(psi, psi.conj())
dims = [2, 3, 2]
rAB = ptrace(rho, dims, [0, 1])
rB = ptrace(rho, dims, [1])
rA = ptrace(rho, dims, [0])
rAE = ptrace(rho, dims, [0, 2])
rE = ptrace(rho, dims, [2])
print("S(A)", repr(vn(rA)))
print("S(A|B)", repr(vn(rAB) - vn(rB)))
print("Hmin(A|rhoB)", repr(hmin_rel(rAB, rB, 2)))
print("H2(A|rhoB)", repr(h2_rel(rAB, rB, 2)))
print("Hmin(A|B) sdp", repr(hmin_cond_sdp(rAB, 2, 3)))
print("Hmax(A|B) = -Hmin(A|E) sdp", repr(-hmin_cond_sdp(rAE, 2, 2)))
wA = np.sort(np.linalg.eigvalsh(rA))[::-1]
print("Hmax(A)", repr(2 * math.log2(np.sqrt(np.clip(wA, 0, None)).sum())))
tau = np.eye(6) / 6
print("F(rhoAB, tau)", repr(fidelity(rAB, tau)))
print("D(rhoAB, tau)", repr(0.5 * np.abs(np.linalg.eigvalsh(rAB - tau)).sum()))

print("# typicality p=(0.8,0.2) n=6 delta=0.2")
p = np.array([0.8, 0.2])
S = float(-(p * np.log2(p)).sum())
rank = 0
mass = 0.0
for x in itertools.product([0, 1], repeat=6):
    lp = sum(math.log2(p[i]) for i in x)
    if abs(-lp / 6 - S) <= 0.2:
        rank += 1
        mass += 2 ** lp
print("rank", rank, "mass", repr(mass))

print("# embezzling")
def H(d):
    return sum(1.0 / j for j in range(1, d + 1))
def aligned(d):
    return sum(j ** -0.5 for j in range(1, d + 1)) ** 2 / (d * H(d))
ok = [aligned(d) >= 5 / math.log2(d) for d in range(2, 2049)]
thr = 2049
for d in range(2048, 1, -1):
    if not ok[d - 2]:
        break
    thr = d
print("singlet threshold up to 2048:", thr)
for d in (8, 16, 32, 64):
    hd = H(d)
    print("hmax", d, repr(2 * math.log2(sum((j * hd) ** -0.5 for j in range(1, d + 1)))))
    a = 1.0 / d
    G = (1 - a) * np.eye(d) + a * np.ones((d, d))
    print("gram lmax", d, repr(math.log2(np.linalg.eigvalsh(G).max())))
print("aligned d=2", repr(aligned(2)))

print("# truncation (spectrum, eps) -> value, k")
def trunc(spec, eps):
    delta = eps * eps / 2
    best = None
    for k in range(1, len(spec) + 1):
        if sum(spec[k:]) <= delta + 1e-15:
            s = sum(math.sqrt(x) for x in spec[: k - 1])
            v = 2 * math.log2(s) if s > 0 else -math.inf
            if best is None or v < best[0]:
                best = (v, k)
    return best
print(trunc([0.4, 0.3, 0.2, 0.1], 0.5))
print(trunc([0.5, 0.25, 0.25], math.sqrt(0.5)))
print(trunc([0.7, 0.1, 0.1, 0.05, 0.05], 0.4))
