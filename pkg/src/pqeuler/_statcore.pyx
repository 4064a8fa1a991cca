# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled statistics kernel; semantics identical to _statpure.stat_tuple."""

DEF MAXN = 64


def stat_tuple(word):
    cdef int n = len(word)
    if n > MAXN:
        raise ValueError(f"word longer than {MAXN} not supported by the compiled kernel")
    cdef int w[MAXN]
    cdef int i, j, t, pos, v, si, sj, a, b, nxt
    for i in range(n):
        w[i] = word[i]

    cdef int exc = 0, wex = 0, fix = 0
    for i in range(n):
        v = w[i]
        pos = i + 1
        if v > pos:
            exc += 1
        if v >= pos:
            wex += 1
        if v == pos:
            fix += 1

    cdef int des = 0, maj = 0
    for i in range(n - 1):
        if w[i] > w[i + 1]:
            des += 1
            maj += i + 1
    cdef int ndes = n - des

    cdef int inv = 0
    for i in range(n):
        v = w[i]
        for j in range(i + 1, n):
            if v > w[j]:
                inv += 1

    cdef int cros = 0, nest = 0
    for i in range(1, n + 1):
        si = w[i - 1]
        for j in range(i + 1, n + 1):
            sj = w[j - 1]
            if j <= si and si < sj:
                cros += 1
            elif si < sj and sj < i:
                cros += 1
            if j <= sj and sj < si:
                nest += 1
            elif sj < si and si < i:
                nest += 1

    cdef int toht = 0, thto = 0, thot = 0
    for t in range(n - 1):
        a = w[t]
        b = w[t + 1]
        for j in range(t + 2, n):
            v = w[j]
            if a > v and v > b:
                toht += 1
        for j in range(t):
            v = w[j]
            if a > v and v > b:
                thto += 1
            elif a < v and v < b:
                thot += 1

    cdef int fmax = 0, running_max = 0
    for i in range(n):
        v = w[i]
        if v > running_max:
            running_max = v
            if i == n - 1 or v < w[i + 1]:
                fmax += 1

    cdef int suc = 0, adj = 0
    for i in range(n):
        nxt = w[i + 1] if i + 1 < n else n + 1
        if nxt == w[i] + 1:
            suc += 1
        nxt = w[i + 1] if i + 1 < n else 0
        if nxt == w[i] - 1:
            adj += 1

    cdef int mad = des + toht + 2 * thto
    return (n, exc, wex, fix, des, ndes, maj, inv, cros, nest,
            toht, thto, thot, fmax, mad, suc, adj)
