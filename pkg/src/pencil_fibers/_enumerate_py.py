"""Pure-Python candidate search kernel (fallback for the compiled one)."""


def enumerate_vectors(e, d, mults, prox):
    """All integer vectors v with 0 <= v_i <= e satisfying the candidate conditions.

    ``mults[i]`` is the generic multiplicity of point i and ``prox[i]`` the
    indices (all < i) that point i is proximate to. Output is in
    lexicographic order.
    """
    n = len(mults)
    target = e * d
    cap = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        cap[i] = cap[i + 1] + e * mults[i]
    lin_max = 3 * e - 1
    sq_max = e * e + 1
    pg_max = (e - 1) * (e - 2)
    v = [0] * n
    excess = [0] * n
    out = []

    def dfs(i, s_e, s_sq, s_lin):
        if s_e + cap[i] < target:
            return
        if s_sq - s_lin > pg_max and (s_sq > sq_max or s_lin > lin_max):
            return
        if i == n:
            if s_e == target and _final(e, s_sq, s_lin):
                out.append(tuple(v))
            return
        m = mults[i]
        ub = min(e, (target - s_e) // m)
        for p in prox[i]:
            if excess[p] < ub:
                ub = excess[p]
        for val in range(ub + 1):
            v[i] = val
            excess[i] = val
            for p in prox[i]:
                excess[p] -= val
            dfs(i + 1, s_e + val * m, s_sq + val * val, s_lin + val)
            for p in prox[i]:
                excess[p] += val
        v[i] = 0
        excess[i] = 0

    dfs(0, 0, 0, 0)
    return out


def _final(e, s_sq, s_lin):
    if e * e > s_sq:
        return False
    a = -3 * e + s_lin
    b = e * e - s_sq
    if a >= 0 and e * e - 3 * e + 2 >= s_sq - s_lin:
        return True
    if b == 0 and a == -2:
        return True
    return a == -1 and b == -1
