"""Independent numpy route for the golden values frozen in tests/golden.hpp.

Run: python3 tests/oracles/make_golden.py
Everything here is rebuilt from scratch (no shared code with the C++ library).
"""
import numpy as np
from numpy.linalg import eigh
from scipy.linalg import expm, cosm


def fock(n):
    a = np.diag(np.sqrt(np.arange(1, n + 1)), 1).astype(complex)
    return a


def rabi_dipole(eta, wc, wq, nmax):
    a = fock(nmax)
    i2, iN = np.eye(2), np.eye(nmax + 1)
    sz = np.diag([-1.0, 1.0]).astype(complex)
    sx = np.array([[0, 1], [1, 0]], complex)
    g = eta * wc
    return (wc * np.kron(i2, a.conj().T @ a) + 0.5 * wq * np.kron(sz, iN)
            + 1j * g * np.kron(sx, a.conj().T - a))


def rabi_coulomb_std(eta, wc, wq, nmax):
    a = fock(nmax)
    x = a + a.conj().T
    i2, iN = np.eye(2), np.eye(nmax + 1)
    sz = np.diag([-1.0, 1.0]).astype(complex)
    sy = np.array([[0, 1j], [-1j, 0]])
    gc = eta * wq
    return (wc * np.kron(i2, a.conj().T @ a) + 0.5 * wq * np.kron(sz, iN)
            + gc * np.kron(sy, x) + gc ** 2 / wq * np.kron(i2, x @ x))


def rabi_coulomb_correct(eta, wc, wq, nmax):
    a = fock(nmax)
    x = a + a.conj().T
    sz = np.diag([-1.0, 1.0]).astype(complex)
    sx = np.array([[0, 1], [1, 0]], complex)
    u = expm(1j * eta * np.kron(sx, x))
    return (wc * np.kron(np.eye(2), a.conj().T @ a)
            + u @ (0.5 * wq * np.kron(sz, np.eye(nmax + 1))) @ u.conj().T)


def taylor(eta, wc, wq, nmax, order):
    a = fock(nmax)
    x = (2 * eta * (a + a.conj().T)).real
    w, v = eigh(x)
    c = np.zeros_like(w)
    s = np.zeros_like(w)
    term = np.ones_like(w)
    for k in range(order + 1):
        if k > 0:
            term = term * w / k
        if k % 2 == 0:
            c += (-1) ** (k // 2) * term
        else:
            s += (-1) ** ((k - 1) // 2) * term
    cp = v @ np.diag(c) @ v.T
    sp = v @ np.diag(s) @ v.T
    sz = np.diag([-1.0, 1.0])
    sy = np.array([[0, 1j], [-1j, 0]])
    return (wc * np.kron(np.eye(2), (a.conj().T @ a)) + 0.5 * wq * (np.kron(sz, cp) + np.kron(sy, sp)))


def trans(h, k):
    e = np.linalg.eigvalsh(h)
    return e[1:k + 1] - e[0]


def spin(two_j):
    j = two_j / 2
    m = -j + np.arange(two_j + 1)
    jp = np.zeros((two_j + 1, two_j + 1))
    for k in range(two_j):
        jp[k + 1, k] = np.sqrt(j * (j + 1) - m[k] * (m[k] + 1))
    jx = (jp + jp.T) / 2
    jy = (jp - jp.T) / 2j
    return jx, jy, np.diag(m)


def dicke_std(n, eta, wc, wq, nmax):
    jx, jy, jz = spin(n)
    a = fock(nmax)
    x = a + a.conj().T
    gc = eta * wq
    j = n / 2
    ij = np.eye(n + 1)
    return (wc * np.kron(ij, a.conj().T @ a) + wq * np.kron(jz, np.eye(nmax + 1))
            + 2 * gc * np.kron(jy, x) + j * 2 * gc ** 2 / wq * np.kron(ij, x @ x))


def double_well_ho(mu, lam, m, nb=300, scale=None):
    # Harmonic-oscillator basis expansion, x = s (b + b†)/sqrt2.
    s = scale or 0.6
    b = np.diag(np.sqrt(np.arange(1, nb)), 1)
    x = s * (b + b.T) / np.sqrt(2)
    p = 1j / (s * np.sqrt(2)) * (b.T - b)
    h = (p @ p).real / (2 * m) - mu * x @ x + lam * np.linalg.matrix_power(x, 4)
    # Drop the top states polluted by truncation of x^4.
    keep = nb - 8
    h = h[:keep, :keep]
    xk = x[:keep, :keep]
    e, v = eigh(h)
    xe = v.T @ xk @ v
    return e, xe


def fluxonium_grid(ec, el, ej, n=4001, L=40.0):
    # Phase grid, 2nd-order FD with Richardson extrapolation on two spacings.
    def solve(n):
        phi = np.linspace(-L / 2, L / 2, n)
        h = phi[1] - phi[0]
        d2 = (np.diag(-2 * np.ones(n)) + np.diag(np.ones(n - 1), 1) + np.diag(np.ones(n - 1), -1)) / h ** 2
        H = -4 * ec * d2 + np.diag(0.5 * el * phi ** 2 - ej * np.cos(phi))
        from scipy.linalg import eigh_tridiagonal
        e, v = eigh_tridiagonal(np.diag(H), np.diag(H, 1), select='i', select_range=(0, 3))
        p10 = abs(np.sum(v[:, 1] * phi * v[:, 0]))
        return e, p10
    e1, p1 = solve(n)
    e2, p2 = solve(2 * n - 1)
    return (4 * e2 - e1) / 3, (4 * p2 - p1) / 3


if __name__ == "__main__":
    np.set_printoptions(precision=15)
    print("H_D eta=1 cutoff=300:", repr(trans(rabi_dipole(1.0, 1, 1, 300), 6)))
    d = trans(rabi_dipole(1.0, 1, 1, 120), 1)[0]
    c = trans(rabi_coulomb_std(1.0, 1, 1, 120), 1)[0]
    print("H_C' eta=1 first transition:", repr(c), "relative deviation", repr(abs(c - d) / d))
    print("Ccorr eta=1 cutoff=120:", repr(trans(rabi_coulomb_correct(1.0, 1, 1, 120), 6)))
    print("Dicke N=4 eta=0.3 standard cutoff=60:", repr(trans(dicke_std(4, 0.3, 1, 1, 60), 6)))
    e, xe = double_well_ho(2.0, 0.5, 1.0)
    print("double well E0..3:", repr(e[:4]))
    print("w10 w21 x10:", repr(e[1] - e[0]), repr(e[2] - e[1]), repr(abs(xe[1, 0])))
    trk = sum(2 * (e[n] - e[0]) * xe[n, 0] ** 2 for n in range(1, 50))
    print("TRK M=50:", repr(trk))
    ef, p10 = fluxonium_grid(0.2, 0.15, 1.0)
    print("fluxonium w10 phi10:", repr(ef[1] - ef[0]), repr(p10))
    grid = np.round(np.arange(0, 1.5 + 1e-9, 0.025), 12)
    for order in (2, 3, 200):
        thr, brk = 0.0, None
        ok = True
        for eta in grid:
            ex = trans(rabi_coulomb_correct(eta, 1, 1, 80), 5)
            ap = trans(taylor(eta, 1, 1, 80, order), 5)
            err = np.max(np.abs(ap - ex) / np.maximum(np.abs(ex), 1.0))
            if ok and err <= 0.01:
                thr = eta
            else:
                ok = False
            if brk is None and err > 0.10:
                brk = eta
            if not ok and brk is not None:
                break
        print(f"Taylor n={order}: threshold {thr} breakdown {brk}")
