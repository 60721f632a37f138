import math

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section(f, lo, hi, xtol=1e-12, max_iter=500):
    """Minimize a unimodal scalar function on [lo, hi].

    Returns ``(argmin, minimum)``.  Stops once the bracket is narrower than
    ``xtol`` or no longer shrinks in floating point.
    """
    if hi < lo:
        lo, hi = hi, lo
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if hi - lo <= xtol:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = f(x2)
        if not (lo < x1 < hi) and not (lo < x2 < hi):
            break
    return (x1, f1) if f1 <= f2 else (x2, f2)


def expand_bracket(f, x, step, fx=None, grow=2.0, max_steps=200, stop_below=-math.inf):
    """Walk from ``x`` in direction ``step`` while ``f`` keeps decreasing.

    Returns the last three abscissae ``(a, b, c)`` with ``f(b)`` the smallest
    seen.  Gives up after ``max_steps`` or once ``f`` drops under
    ``stop_below`` (the caller only needs to know the minimum is that low).
    """
    fx = f(x) if fx is None else fx
    prev, cur, fcur = x - step, x, fx
    for _ in range(max_steps):
        nxt = cur + step
        fnxt = f(nxt)
        if not fnxt < fcur:
            return prev, cur, nxt
        prev, cur, fcur = cur, nxt, fnxt
        if fcur < stop_below:
            break
        step *= grow
    return prev, cur, cur + step
