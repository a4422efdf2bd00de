import numpy as np


def cos_sin_pi(u):
    """Return (cos(pi*u), sin(pi*u)) with exact values at multiples of 1/2.

    ``np.sin(k * np.pi)`` is ~k*1e-16 instead of 0; reducing the argument in
    units of pi before calling into libm removes that drift, which matters for
    series evaluated at the identified endpoint x = +-pi.
    """
    u = np.asarray(u, dtype=float)
    r = np.remainder(u, 2.0)
    quarter = np.rint(2.0 * r)
    frac = r - 0.5 * quarter
    q = np.remainder(quarter, 4.0).astype(int)
    c0 = np.cos(np.pi * frac)
    s0 = np.sin(np.pi * frac)
    cos_tab = np.stack([c0, -s0, -c0, s0])
    sin_tab = np.stack([s0, c0, -s0, -c0])
    cos_v = np.take_along_axis(cos_tab, q[None, ...], axis=0)[0]
    sin_v = np.take_along_axis(sin_tab, q[None, ...], axis=0)[0]
    return cos_v, sin_v

