"""Pure-Python inner loops, used when the compiled extension is unavailable.

Each function mirrors its counterpart in ``_ckernels.pyx`` operation for
operation, so both backends return bit-identical floats. Integer
bookkeeping is returned as ``(executed, elided)`` loop-body counts:

* ``executed`` -- loop bodies actually run;
* ``elided`` -- loop bodies skipped by the exact early exit.

``executed + elided`` always equals ``T - f`` per evaluated frequency.

Both divisions of the recurrence are taken as multiplications by the
reciprocals ``1/(T - v)`` and ``1/v``. In the compiled backend those
reciprocals are shared by all frequencies evaluated together.

Early exit: once a term ``R/v`` is below half an ulp of the running sum
``Q`` the addition cannot change ``Q``, and because ``R`` never increases
and ``v`` only grows, no later term can either. ``term * 2**54 < Q`` is a
sufficient test for that condition, so stopping there is bit-identical to
running the loop to completion.
"""

BACKEND = "python"

_FREEZE = 18014398509481984.0  # 2**54


def q_single(f, t, exact_exit=True):
    """Running-product evaluation of ``Q(f)`` for a text of ``t`` tokens."""
    q = 0.0
    r = 1.0
    c = 1 - f
    n = t - f
    for v in range(1, n + 1):
        r *= 1.0 + c * (1.0 / (t - v))
        term = r * (1.0 / v)
        if exact_exit and term * _FREEZE < q:
            return q, v - 1, n - v + 1
        q += term
    return q, n, 0


def q_many(fs, t, exact_exit=True):
    out = []
    executed = elided = 0
    for f in fs:
        q, ex, el = q_single(f, t, exact_exit)
        out.append(q)
        executed += ex
        elided += el
    return out, executed, elided


def linear_sum(fs, t, exact_exit=True):
    """``sum(f_i * Q(f_i))`` accumulated in input order."""
    k = 0.0
    executed = elided = 0
    for f in fs:
        q, ex, el = q_single(f, t, exact_exit)
        k += f * q
        executed += ex
        elided += el
    return k, executed, elided


def running_products(f, t):
    """Yield ``R(v, f)`` for ``v = 1 .. t - f``, exactly as ``q_single`` forms them."""
    r = 1.0
    c = 1 - f
    for v in range(1, t - f + 1):
        r *= 1.0 + c * (1.0 / (t - v))
        yield r
