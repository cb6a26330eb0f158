"""Independent reference values frozen into tests/oracle_values.hpp.

Full-matrix numpy implementation of the student-teacher gradient (no reduction to
fixed-point coordinates), quadrature for the kernel, and scipy root finding.
Run: python3 tools/oracles.py > tests/oracle_values.hpp
"""
import numpy as np
from scipy import integrate, optimize

PI = np.pi


def kernel_quad(w, v, lam):
    # E[s(w.x) s(v.x)] / (2 + a^2 - 2a) for x ~ N(0, I), leaky slope 1 - a, done in polar form.
    a = 1.0 if lam == 1 else (-lam + np.sqrt(lam * lam + 2 * lam * (1 - lam))) / (1 - lam)
    s = lambda t: max(t, (1 - a) * t)
    f = lambda phi: s(w @ [np.cos(phi), np.sin(phi)]) * s(v @ [np.cos(phi), np.sin(phi)])
    val, _ = integrate.quad(f, 0, 2 * PI, limit=200, points=[0.5, 1, 2, 3, 4, 5, 6], epsabs=1e-14, epsrel=1e-13)
    return val / PI / (2 + a * a - 2 * a)


def grad_full(W, lam):
    k = W.shape[0]
    V = np.eye(k)
    G = np.zeros_like(W)
    cs = W.sum(axis=0)
    for i in range(k):
        wi = W[i]
        ni = np.linalg.norm(wi)
        g = np.zeros(k)
        for j in range(k):
            if j != i:
                wj = W[j]
                c = np.clip(wi @ wj / (ni * np.linalg.norm(wj)), -1, 1)
                th = np.arccos(c)
                g += np.linalg.norm(wj) * np.sin(th) / ni * wi - th * wj
            c = np.clip(wi @ V[j] / ni, -1, 1)
            al = np.arccos(c)
            g -= np.sin(al) / ni * wi - al * V[j]
        G[i] = lam / (2 * PI) * g + (cs - 1) / 2
    return G


def embed_A(x, k):
    return np.full((k, k), x[1]) + np.eye(k) * (x[0] - x[1])


def embed_I(x, k):
    W = np.full((k, k), x[1])
    np.fill_diagonal(W, x[0])
    W[: k - 1, k - 1] = x[2]
    W[k - 1, : k - 1] = x[3]
    W[k - 1, k - 1] = x[4]
    return W


def s_rows(W):
    return grad_full(W, 1) - grad_full(W, 0)


def consistency_A(x, k):
    W = embed_A(x, k)
    S = s_rows(W)
    return [S[0, 0] - S[1, 0], W.sum(axis=0)[0] - 1]


def consistency_I(x, k):
    W = embed_I(x, k)
    S = s_rows(W)
    cs = W.sum(axis=0)
    return [S[0, 0] - S[1, 0], S[0, 0] - S[k - 1, 0], S[0, k - 1] - S[k - 1, k - 1], cs[0] - 1, cs[k - 1] - 1]


def critical(embed, x0, k, lam, picks):
    f = lambda x: [grad_full(embed(x, k), lam)[i, j] / lam for (i, j) in picks]
    return optimize.fsolve(f, x0, xtol=1e-15)


def fd_derivative(embed, x0, k, picks):
    d = [(critical(embed, x0, k, h, picks) - x0) / h for h in (2e-4, 1e-4)]
    return 2 * d[1] - d[0]


def emit(name, values):
    vals = ", ".join(f"{v:.17g}" for v in np.atleast_1d(values))
    print(f"inline constexpr double {name}[] = {{{vals}}};")


def main():
    print("#pragma once")
    print("// Generated by tools/oracles.py; do not edit by hand.")
    print("namespace oracle {")
    cases = [([1.0, 0.2], [0.3, -1.1], 1.0), ([0.5, 0.5], [-0.2, 0.9], 0.5), ([2.0, -1.0], [1.0, 1.0], 0.2)]
    emit("kernel_cases", [c for w, v, lam in cases for c in (*w, *v, lam)])
    emit("kernel_values", [kernel_quad(np.array(w), np.array(v), lam) for w, v, lam in cases])

    g = lambda k: np.sqrt(k - 1) - np.arccos(1 / np.sqrt(k))
    psi2 = lambda x: 2 * x - 1 - g(2) / PI if x > 0 else 2 * x + g(2) / PI
    emit("gamma_k2", [optimize.brentq(psi2, -1, -1e-12, xtol=1e-15), optimize.brentq(psi2, 1e-12, 2, xtol=1e-15)])

    k = 6
    xa = optimize.fsolve(lambda x: consistency_A(x, k), [-0.66, 0.33], xtol=1e-15)
    emit("typeA_k6_consistency", xa)
    emit("typeA_k6_derivative", fd_derivative(embed_A, xa, k, [(0, 0), (0, 1)]))
    xii = optimize.fsolve(lambda x: consistency_I(x, k), [0.99, -0.05, 0.31, 0.22, -0.60], xtol=1e-15)
    emit("typeII_k6_consistency", xii)
    picks = [(0, 0), (0, 1), (0, k - 1), (k - 1, 0), (k - 1, k - 1)]
    emit("typeII_k6_derivative", fd_derivative(embed_I, xii, k, picks))
    c1 = critical(embed_I, xii, k, 1.0, picks)
    emit("typeII_k6_critical", c1)
    print("}  // namespace oracle")


if __name__ == "__main__":
    main()
