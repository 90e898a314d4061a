"""Pure-numpy kernels (vectorised over rows where the algorithm allows).

Conventions shared with :mod:`.numba_impl`:

* ``charpoly_mod_p(a, p)`` takes a square ``int64`` matrix with entries
  already reduced to ``[0, p)`` and a prime ``p < 2**31``; returns the
  coefficients of ``det(xI - a) mod p``, lowest power first.
* ``tu_weight_sums(n, eu, ev, es)`` returns an ``int64`` array whose entry
  ``i`` is the total weight of TU-subgraphs with ``i`` edges (entry 0 is 1).
* ``switch_class_index(...)`` maps each row of sign bits (1 = negative) to
  the integer index of its switching class relative to a fixed spanning
  forest: switch so that forest edges are positive, then read the remaining
  edge bits as a binary number.
"""

from itertools import combinations
from math import comb

import numpy as np

_CHUNK = 1 << 15


def charpoly_mod_p(a, p):
    n = a.shape[0]
    h = np.array(a, dtype=np.int64, copy=True)
    for c in range(n - 2):
        nz = np.nonzero(h[c + 1:, c])[0]
        if nz.size == 0:
            continue
        piv = c + 1 + nz[0]
        t = c + 1
        if piv != t:
            h[[piv, t], :] = h[[t, piv], :]
            h[:, [piv, t]] = h[:, [t, piv]]
        inv = pow(int(h[t, c]), p - 2, p)
        u = h[t + 1:, c] * inv % p
        if not u.any():
            continue
        h[t + 1:, :] = (h[t + 1:, :] - (u[:, None] * h[t, :][None, :]) % p) % p
        # column update; reduce each product before summing to stay in int64
        h[:, t] = (h[:, t] + ((h[:, t + 1:] * u[None, :]) % p).sum(axis=1)) % p

    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        d = h[k - 1, k - 1]
        row = (-d * polys[k - 1]) % p
        row[1:k + 1] = (row[1:k + 1] + polys[k - 1, :k]) % p
        t = 1
        for i in range(k - 1, 0, -1):
            t = t * int(h[i, i - 1]) % p
            if t == 0:
                break
            coef = t * int(h[i - 1, k - 1]) % p
            if coef:
                row[:i] = (row[:i] - coef * polys[i - 1, :i]) % p
        polys[k] = row
    return polys[n].copy()


def _tu_batch(n, eu, ev, es, combos):
    rows = combos.shape[0]
    label = np.tile(np.arange(n, dtype=np.int64), (rows, 1))
    pot = np.zeros((rows, n), dtype=np.int8)
    cyc = np.zeros((rows, n), dtype=bool)
    valid = np.ones(rows, dtype=bool)
    r = np.arange(rows)
    for t in range(combos.shape[1]):
        e = combos[:, t]
        u, v = eu[e], ev[e]
        neg = (es[e] < 0).astype(np.int8)
        lu, lv = label[r, u], label[r, v]
        flip = pot[r, u] ^ pot[r, v] ^ neg
        cu, cv = cyc[r, lu], cyc[r, lv]
        same = lu == lv
        valid &= np.where(same, (flip == 1) & ~cu, ~(cu & cv))
        cyc[r, lu] |= np.where(same, True, cv)
        mask = (label == lv[:, None]) & ~same[:, None]
        pot = np.where(mask, pot ^ flip[:, None], pot)
        label = np.where(mask, lu[:, None], label)
    sizes = (label[:, :, None] == np.arange(n)[None, None, :]).sum(axis=1)
    factors = np.where(sizes == 0, 1, np.where(cyc, 4, sizes)).astype(np.int64)
    return int(factors[valid].prod(axis=1).sum())


def tu_weight_sums(n, eu, ev, es):
    m = eu.shape[0]
    out = np.zeros(n + 1, dtype=np.int64)
    out[0] = 1
    eu = np.asarray(eu, dtype=np.int64)
    ev = np.asarray(ev, dtype=np.int64)
    es = np.asarray(es, dtype=np.int64)
    for i in range(1, min(n, m) + 1):
        it = combinations(range(m), i)
        remaining = comb(m, i)
        total = 0
        while remaining:
            take = min(remaining, _CHUNK)
            flat = np.fromiter(
                (x for c in _take(it, take) for x in c), dtype=np.int64, count=take * i
            )
            total += _tu_batch(n, eu, ev, es, flat.reshape(take, i))
            remaining -= take
        out[i] = total
    return out


def _take(it, k):
    for _ in range(k):
        yield next(it)


def switch_class_index(bits, eu, ev, tree_parent, tree_child, tree_edge, nontree, n):
    rows = bits.shape[0]
    theta = np.zeros((rows, n), dtype=np.int8)
    for par, child, e in zip(tree_parent, tree_child, tree_edge):
        theta[:, child] = theta[:, par] ^ bits[:, e]
    if len(nontree) == 0:
        return np.zeros(rows, dtype=np.int64)
    nt = np.asarray(nontree, dtype=np.int64)
    nb = bits[:, nt] ^ theta[:, eu[nt]] ^ theta[:, ev[nt]]
    weights = np.left_shift(np.int64(1), np.arange(nt.size, dtype=np.int64))
    return (nb.astype(np.int64) * weights[None, :]).sum(axis=1)
