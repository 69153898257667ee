# Copyright 2026 The mcso Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates reference.json (stdout) and coherent_1p0.5i.json.

reference.json holds brute-force number-basis values at 40 digits.

Independent of the C++ code: states are built with mpmath, Wigner values use
closed-form displacement matrix elements, the thermal channel uses the matrix
exponential of the vectorized Liouvillian.
"""

import json
import sys

import mpmath as mp
import numpy as np
import scipy.linalg

mp.mp.dps = 40
PI = mp.pi


def state(m, theta, phi, a0, odd=True, dim=120):
    a0 = mp.mpc(a0)
    coh = lambda a: [mp.e ** (-abs(a) ** 2 / 2) * a ** n / mp.sqrt(mp.factorial(n)) for n in range(dim)]
    p, q = coh(a0), coh(-a0)
    v = [x - y if odd else x + y for x, y in zip(p, q)]
    c, s, e = mp.cos(theta), mp.sin(theta), mp.e ** (1j * phi)
    for _ in range(m):
        w = [mp.mpc(0)] * dim
        for n in range(dim):
            if n + 1 < dim:
                w[n] += c * mp.sqrt(n + 1) * v[n + 1]
            if n > 0:
                w[n] += e * s * mp.sqrt(n) * v[n - 1]
        v = w
    return v


def norm2(v):
    return mp.fsum(abs(x) ** 2 for x in v)


def moment(v, j, k):
    # <a^dag^j a^k> normalized
    def lower(u, r):
        for _ in range(r):
            u = [mp.sqrt(n + 1) * u[n + 1] for n in range(len(u) - 1)] + [mp.mpc(0)]
        return u
    return mp.fsum(mp.conj(x) * y for x, y in zip(lower(v, j), lower(v, k))) / norm2(v)


def a2ad2(v):
    # <a^2 a^dag^2> = <a^dag^2 a^2> + 4 <a^dag a> + 2
    return moment(v, 2, 2) + 4 * moment(v, 1, 1) + 2


def photocount(v, xi, n):
    nv = norm2(v)
    return mp.fsum(mp.binomial(k, n) * xi ** n * (1 - xi) ** (k - n) * abs(v[k]) ** 2
                   for k in range(n, len(v))) / nv


def displacement_element(mrow, ncol, alpha):
    # <m|D(alpha)|n> via associated Laguerre polynomials
    if mrow >= ncol:
        d = mrow - ncol
        return (mp.sqrt(mp.factorial(ncol) / mp.factorial(mrow)) * alpha ** d *
                mp.e ** (-abs(alpha) ** 2 / 2) * mp.laguerre(ncol, d, abs(alpha) ** 2))
    d = ncol - mrow
    return (mp.sqrt(mp.factorial(mrow) / mp.factorial(ncol)) * (-mp.conj(alpha)) ** d *
            mp.e ** (-abs(alpha) ** 2 / 2) * mp.laguerre(mrow, d, abs(alpha) ** 2))


def wigner(v, alpha):
    alpha = mp.mpc(alpha)
    dim = len(v)
    nv = norm2(v)
    total = mp.mpf(0)
    for r in range(dim):
        amp = mp.fsum(displacement_element(r, n, -alpha) * v[n] for n in range(dim))
        total += (-1) ** r * abs(amp) ** 2
    return 2 / PI * total / nv


def evolved_wigner(v, kappa_t, nbar, points, dim=40):
    # d rho/dt = kappa (nbar+1)(2 a rho a^+ - a^+a rho - rho a^+a) + kappa nbar (2 a^+ rho a - a a^+ rho - rho a a^+)
    psi = np.array([complex(x) for x in v[:dim]])
    rho = np.outer(psi, psi.conj())
    rho /= np.trace(rho).real
    a = np.diag(np.sqrt(np.arange(1, dim)), 1).astype(complex)
    ad = a.conj().T
    eye = np.eye(dim)

    def dissipator(L):
        LdL = L.conj().T @ L
        # column-stacking vec: vec(A X B) = (B^T kron A) vec(X)
        return 2 * np.kron(L.conj(), L) - np.kron(eye, LdL) - np.kron(LdL.T, eye)

    liou = (nbar + 1) * dissipator(a) + nbar * dissipator(ad)
    vec = scipy.linalg.expm(liou * kappa_t) @ rho.reshape(-1, order="F")
    rho_t = vec.reshape(dim, dim, order="F")
    rho_t = 0.5 * (rho_t + rho_t.conj().T)
    out = []
    for g in points:
        g = complex(g)
        D = np.array([[complex(displacement_element(r, n, -g)) for n in range(dim)] for r in range(dim)])
        sigma = D @ rho_t @ D.conj().T
        parity = np.array([(-1) ** r for r in range(dim)])
        out.append(float(2 / np.pi * np.sum(parity * np.diag(sigma).real)))
    return out


def s(x):
    return mp.nstr(x, 20)


def cx(z):
    z = mp.mpc(z)
    return [s(z.real), s(z.imag)]


def write_coherent(path, alpha=mp.mpc(1, 0.5), cutoff=512):
    amps = []
    c = mp.e ** (-abs(alpha) ** 2 / 2)
    for n in range(cutoff + 1):
        if n > 0:
            c *= alpha / mp.sqrt(n)
        amps += [float(c.real), float(c.imag)]
    with open(path, "w") as f:
        json.dump({"cutoff": cutoff, "amps": amps}, f)


def main():
    write_coherent("coherent_1p0.5i.json")
    ref = {}
    # special functions by their explicit sums
    z = mp.mpc(1, 1)
    ref["hermite_3_1p1i"] = cx(mp.fsum((-1) ** l * mp.factorial(3) * (2 * z) ** (3 - 2 * l) /
                                       (mp.factorial(l) * mp.factorial(3 - 2 * l)) for l in range(2)))
    ref["laguerre_4_2p5"] = s(mp.fsum(mp.binomial(4, k) * (-mp.mpf(2.5)) ** k / mp.factorial(k) for k in range(5)))
    ref["hermite2_2_1_1_2"] = s(mp.fsum((-1) ** l * mp.factorial(2) * mp.factorial(1) * 1 ** (2 - l) * 2 ** (1 - l) /
                                        (mp.factorial(l) * mp.factorial(2 - l) * mp.factorial(1 - l)) for l in range(2)))

    st = {}
    v = state(1, PI / 4, 0, 1)
    st["normalization_m1_pi4_a1"] = s(norm2(v))
    v0, v2 = state(0, PI / 3, 0, 2), state(2, PI / 3, 0, 2)
    ov = mp.fsum(mp.conj(x) * y for x, y in zip(v0, v2))
    st["fidelity_m2_pi3_a2"] = s(abs(ov) ** 2 / (norm2(v0) * norm2(v2)))
    st["mean_photon_m0_a1"] = s(moment(state(0, PI / 4, 0, 1), 1, 1).real)
    st["mean_photon_m1_pi4_a0p5"] = s(moment(state(1, PI / 4, 0, 0.5), 1, 1).real)
    st["mean_photon_m2_pi8_phipi3_a1p1i"] = s(moment(state(2, PI / 8, PI / 3, mp.mpc(1, 1)), 1, 1).real)
    st["a2ad2_m0_a1"] = s(a2ad2(state(0, PI / 4, 0, 1)).real)
    st["a2ad2_m3_pi4_a0p5"] = s(a2ad2(state(3, PI / 4, 0, 0.5)).real)
    # <a^dag^2> = conj(<a^2>)
    st["ad2_m0_a1"] = cx(mp.conj(moment(state(0, PI / 4, 0, 1), 0, 2)))
    st["ad2_m1_pi6_a0p1"] = cx(mp.conj(moment(state(1, PI / 6, 0, 0.1), 0, 2)))
    st["mean_photon_even_m0_a1"] = s(moment(state(0, PI / 4, 0, 1, odd=False), 1, 1).real)
    st["normalization_even_m2_pi3_a1p1i"] = s(norm2(state(2, PI / 3, 0, mp.mpc(1, 1), odd=False)))
    vp = state(4, PI / 4, 0, mp.mpc(0.5, 0.5))
    st["photocount_fig4_xi0p2"] = [s(photocount(vp, mp.mpf("0.2"), n)) for n in range(8)]
    st["photocount_fig4_xi0p9"] = [s(photocount(vp, mp.mpf("0.9"), n)) for n in range(8)]
    ref["state"] = st

    ws = {}
    pts = [0, mp.mpc(0.3, -0.2), mp.mpc(-1, 0.5), mp.mpc(1.2, 1.1)]
    vw = state(2, PI / 3, 0, mp.mpc(1, 1), dim=90)
    ws["points"] = [cx(p) for p in pts]
    ws["m2_pi3_a1p1i"] = [s(wigner(vw, p)) for p in pts]
    vw1 = state(1, PI / 3, 0, mp.mpc(1, 1), dim=90)
    ws["m1_pi3_a1p1i"] = [s(wigner(vw1, p)) for p in pts]
    ws["evolved_m1_pi3_a1p1i_kt0p05_nbar0p2"] = [repr(x) for x in evolved_wigner(vw1, 0.05, 0.2, pts)]
    ws["evolved_m1_pi3_a1p1i_kt0p1_nbar0p2"] = [repr(x) for x in evolved_wigner(vw1, 0.1, 0.2, pts)]
    ref["wigner"] = ws
    json.dump(ref, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
