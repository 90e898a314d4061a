"""Numba-compiled kernels.

Same signatures and results as :mod:`.numpy_impl`; see that module for the
argument conventions.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _modpow(a, e, p):
    r = 1
    a %= p
    while e > 0:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


@njit(cache=True)
def charpoly_mod_p(a, p):
    n = a.shape[0]
    h = a.copy()
    # similarity reduction to upper Hessenberg form over GF(p)
    for c in range(n - 2):
        piv = -1
        for i in range(c + 1, n):
            if h[i, c] != 0:
                piv = i
                break
        if piv == -1:
            continue
        t = c + 1
        if piv != t:
            for j in range(n):
                tmp = h[piv, j]
                h[piv, j] = h[t, j]
                h[t, j] = tmp
            for j in range(n):
                tmp = h[j, piv]
                h[j, piv] = h[j, t]
                h[j, t] = tmp
        inv = _modpow(h[t, c], p - 2, p)
        for r in range(t + 1, n):
            if h[r, c] == 0:
                continue
            u = h[r, c] * inv % p
            for j in range(n):
                h[r, j] = (h[r, j] - u * h[t, j]) % p
            for j in range(n):
                h[j, t] = (h[j, t] + u * h[j, r]) % p

    polys = np.zeros((n + 1, n + 1), np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        d = h[k - 1, k - 1]
        polys[k, 0] = (-d * polys[k - 1, 0]) % p
        for j in range(1, k + 1):
            polys[k, j] = (polys[k - 1, j - 1] - d * polys[k - 1, j]) % p
        t = 1
        for i in range(k - 1, 0, -1):
            t = t * h[i, i - 1] % p
            if t == 0:
                break
            coef = t * h[i - 1, k - 1] % p
            if coef == 0:
                continue
            for j in range(i):
                polys[k, j] = (polys[k, j] - coef * polys[i - 1, j]) % p
    return polys[n].copy()


@njit(cache=True)
def tu_weight_sums(n, eu, ev, es):
    m = eu.shape[0]
    out = np.zeros(n + 1, np.int64)
    out[0] = 1
    parent = np.arange(n)
    size = np.ones(n, np.int64)
    par = np.zeros(n, np.int64)
    cyc = np.zeros(n, np.bool_)
    st_edge = np.empty(n + 1, np.int64)
    st_kind = np.empty(n + 1, np.int64)
    st_a = np.empty(n + 1, np.int64)
    st_b = np.empty(n + 1, np.int64)
    st_cyc = np.empty(n + 1, np.bool_)
    depth = 0
    e = 0
    while True:
        if depth < n and e < m:
            u = eu[e]
            v = ev[e]
            neg = 1 if es[e] < 0 else 0
            ru = u
            pu = 0
            while parent[ru] != ru:
                pu ^= par[ru]
                ru = parent[ru]
            rv = v
            pv = 0
            while parent[rv] != rv:
                pv ^= par[rv]
                rv = parent[rv]
            ok = False
            if ru == rv:
                # closing a cycle: keep only a first, unbalanced one
                if (not cyc[ru]) and (pu ^ pv ^ neg) == 1:
                    cyc[ru] = True
                    st_kind[depth] = 1
                    st_a[depth] = ru
                    ok = True
            elif not (cyc[ru] and cyc[rv]):
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                    pu, pv = pv, pu
                parent[rv] = ru
                par[rv] = pu ^ pv ^ neg
                size[ru] += size[rv]
                st_cyc[depth] = cyc[ru]
                cyc[ru] = cyc[ru] or cyc[rv]
                st_kind[depth] = 0
                st_a[depth] = ru
                st_b[depth] = rv
                ok = True
            if ok:
                st_edge[depth] = e
                depth += 1
                w = 1
                for x in range(n):
                    if parent[x] == x:
                        if cyc[x]:
                            w *= 4
                        else:
                            w *= size[x]
                out[depth] += w
            e += 1
            continue
        if depth == 0:
            break
        depth -= 1
        if st_kind[depth] == 1:
            cyc[st_a[depth]] = False
        else:
            ra = st_a[depth]
            rb = st_b[depth]
            parent[rb] = rb
            par[rb] = 0
            size[ra] -= size[rb]
            cyc[ra] = st_cyc[depth]
        e = st_edge[depth] + 1
    return out


@njit(cache=True)
def switch_class_index(bits, eu, ev, tree_parent, tree_child, tree_edge, nontree, n):
    rows = bits.shape[0]
    out = np.zeros(rows, np.int64)
    theta = np.zeros(n, np.int8)
    for r in range(rows):
        for x in range(n):
            theta[x] = 0
        for t in range(tree_edge.shape[0]):
            theta[tree_child[t]] = theta[tree_parent[t]] ^ bits[r, tree_edge[t]]
        idx = 0
        for b in range(nontree.shape[0]):
            e = nontree[b]
            if bits[r, e] ^ theta[eu[e]] ^ theta[ev[e]]:
                idx |= 1 << b
        out[r] = idx
    return out
