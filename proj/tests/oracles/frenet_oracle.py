"""Independent oracle for the frozen values in the C++ tests.

Integrates the Lorentzian Frenet system with SciPy's DOP853 at tight
tolerance and differentiates everything with 7-point central stencils.
Shares no code with the C++ library. Run: python3 frenet_oracle.py
"""
import numpy as np
from scipy.integrate import solve_ivp

G = np.diag([-1.0, 1.0, 1.0])


def inner(u, v):
    return float(u @ G @ v)


def frenet_rhs(kappa, tau):
    def rhs(s, y):
        r, t, n, b = y[0:3], y[3:6], y[6:9], y[9:12]
        k, w = kappa(s), tau(s)
        return np.concatenate([t, k * n, k * t - w * b, w * n])
    return rhs


def integrate(kappa, tau, s_end):
    y0 = np.concatenate([np.zeros(3), [1, 0, 0], [0, 1, 0], [0, 0, 1]]).astype(float)
    sol = solve_ivp(frenet_rhs(kappa, tau), (0.0, s_end), y0, method="DOP853",
                    rtol=1e-13, atol=1e-14, dense_output=True)
    return sol


def d7(f, s, h=1e-3):
    # 7-point first derivative, O(h^6)
    return (f(s + 3 * h) - 9 * f(s + 2 * h) + 45 * f(s + h)
            - 45 * f(s - h) + 9 * f(s - 2 * h) - f(s - 3 * h)) / (60 * h)


def main():
    kappa = lambda s: 1.0
    tau = lambda s: s / 4.0
    sol = integrate(kappa, tau, 2.0)

    def frame(s):
        y = sol.sol(s)
        return y[0:3], y[3:6], y[6:9], y[9:12]

    def star(s):
        _, t, n, b = frame(s)
        th = np.arctanh(tau(s) / kappa(s))
        C, S = np.cosh(th), np.sinh(th)
        return n, -C * t + S * b, -S * t + C * b

    def involute(s, c):
        r, t, _, _ = frame(s)
        return r + (c - s) * t

    c = 2.0
    s = 0.5
    x = np.array([1.0, 0.0, 1.0]) / np.sqrt(2.0)

    def X(s_, x_=x):
        ts, ns, bs = star(s_)
        return x_[0] * ts + x_[1] * ns + x_[2] * bs

    gdot = d7(lambda q: involute(q, c), s)
    Xs = X(s)
    Xd = d7(X, s)
    delta = np.linalg.det(np.array([gdot, Xs, Xd])) / abs(inner(Xd, Xd))
    print("general x=(1,0,1)/sqrt2, c=2, s=0.5")
    print("  X'       = [%.15e, %.15e, %.15e]" % tuple(Xd))
    print("  drall    = %.15e" % delta)

    nstar = np.array([0.0, 1.0, 0.0])
    Xn = lambda q: X(q, nstar)
    Xnd = d7(Xn, s)
    offset = -inner(gdot, Xnd) / inner(Xnd, Xnd)
    print("n* c=2 s=0.5")
    print("  striction offset = %.15e" % offset)
    print("  drall n*         = %.15e" % (np.linalg.det(np.array([gdot, Xn(s), Xnd])) / abs(inner(Xnd, Xnd))))

    r, t, n, b = frame(s)
    print("frame at s=0.5")
    for name, v in (("r", r), ("t", t), ("n", n), ("b", b)):
        print("  %s = [%.15e, %.15e, %.15e]" % ((name,) + tuple(v)))

    print("mirror helix theta = artanh(1/2) = %.15e" % np.arctanh(0.5))


if __name__ == "__main__":
    main()
