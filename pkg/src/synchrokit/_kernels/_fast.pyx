# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same names, signatures and results as ``_pure``."""
from libc.stdlib cimport malloc, calloc, realloc, free
from libc.stdint cimport uint8_t, uint32_t, uint64_t, int64_t

BACKEND = "cython"


def _closure_dict(seeds, left, right, Py_ssize_t cap):
    cdef dict seen = {}
    cdef list order = []
    cdef Py_ssize_t i = 0, p, n, nl = len(left), nr = len(right), j
    cdef bytes x, y, g
    cdef const uint8_t[:] xv
    cdef const uint8_t[:] gv
    cdef bytearray buf
    cdef uint8_t[:] bv
    for s in seeds:
        if s not in seen:
            seen[s] = None
            order.append(s)
    if not order:
        return order
    n = len(order[0])
    buf = bytearray(n)
    bv = buf
    while i < len(order):
        x = order[i]
        xv = x
        i += 1
        for j in range(nr):
            g = right[j]
            gv = g
            for p in range(n):
                bv[p] = gv[xv[p]]
            y = bytes(buf)
            if y not in seen:
                seen[y] = None
                order.append(y)
        for j in range(nl):
            g = left[j]
            gv = g
            for p in range(n):
                bv[p] = xv[gv[p]]
            y = bytes(buf)
            if y not in seen:
                seen[y] = None
                order.append(y)
        if len(order) > cap:
            return order[: cap + 1]
    return order


cdef struct _Store:
    uint8_t *elems      # count * n image bytes
    uint64_t *keys      # open-addressing table of packed codes
    Py_ssize_t *slots   # parallel element indices, -1 when empty
    Py_ssize_t count, room, tsize, n


cdef inline uint64_t _pack(uint8_t *x, Py_ssize_t n):
    cdef uint64_t c = 0
    cdef Py_ssize_t i
    for i in range(n):
        c = (c << 4) | x[i]
    return c


cdef inline uint64_t _mix(uint64_t c):
    c ^= c >> 33
    c *= <uint64_t>0xff51afd7ed558ccd
    c ^= c >> 33
    return c


cdef int _grow_table(_Store *st) except -1:
    cdef Py_ssize_t old = st.tsize, i, h
    cdef uint64_t *ok = st.keys
    cdef Py_ssize_t *os = st.slots
    st.tsize = old * 2
    st.keys = <uint64_t *> malloc(st.tsize * sizeof(uint64_t))
    st.slots = <Py_ssize_t *> malloc(st.tsize * sizeof(Py_ssize_t))
    if st.keys == NULL or st.slots == NULL:
        raise MemoryError()
    for i in range(st.tsize):
        st.slots[i] = -1
    for i in range(old):
        if os[i] >= 0:
            h = <Py_ssize_t>(_mix(ok[i]) & <uint64_t>(st.tsize - 1))
            while st.slots[h] >= 0:
                h = (h + 1) & (st.tsize - 1)
            st.keys[h] = ok[i]
            st.slots[h] = os[i]
    free(ok)
    free(os)
    return 0


cdef int _insert(_Store *st, uint8_t *x) except -1:
    # returns 1 if x was new (and appended), 0 otherwise
    cdef uint64_t c = _pack(x, st.n)
    cdef Py_ssize_t h = <Py_ssize_t>(_mix(c) & <uint64_t>(st.tsize - 1)), i
    while st.slots[h] >= 0:
        if st.keys[h] == c:
            return 0
        h = (h + 1) & (st.tsize - 1)
    if st.count == st.room:
        st.room *= 2
        st.elems = <uint8_t *> realloc(st.elems, st.room * st.n)
        if st.elems == NULL:
            raise MemoryError()
    for i in range(st.n):
        st.elems[st.count * st.n + i] = x[i]
    st.keys[h] = c
    st.slots[h] = st.count
    st.count += 1
    if st.count * 2 > st.tsize:
        _grow_table(st)
    return 1


def closure(seeds, left, right, Py_ssize_t cap):
    if not seeds:
        return []
    cdef Py_ssize_t n = len(seeds[0])
    if n > 16:
        return _closure_dict(seeds, left, right, cap)
    cdef Py_ssize_t nl = len(left), nr = len(right), i, j, p, head = 0
    cdef uint8_t *lg = <uint8_t *> malloc(nl * n + 1)
    cdef uint8_t *rg = <uint8_t *> malloc(nr * n + 1)
    cdef uint8_t buf[16]
    cdef uint8_t *x
    cdef const uint8_t[:] v
    cdef _Store st
    st.n = n
    st.count = 0
    st.room = 1024
    st.tsize = 2048
    st.elems = <uint8_t *> malloc(st.room * n)
    st.keys = <uint64_t *> malloc(st.tsize * sizeof(uint64_t))
    st.slots = <Py_ssize_t *> malloc(st.tsize * sizeof(Py_ssize_t))
    cdef list out
    try:
        for i in range(st.tsize):
            st.slots[i] = -1
        for j in range(nl):
            v = left[j]
            for p in range(n):
                lg[j * n + p] = v[p]
        for j in range(nr):
            v = right[j]
            for p in range(n):
                rg[j * n + p] = v[p]
        for s in seeds:
            v = s
            for p in range(n):
                buf[p] = v[p]
            _insert(&st, buf)
        while head < st.count and st.count <= cap:
            for j in range(nr):
                x = st.elems + head * n
                for p in range(n):
                    buf[p] = rg[j * n + x[p]]
                _insert(&st, buf)
            for j in range(nl):
                x = st.elems + head * n
                for p in range(n):
                    buf[p] = x[lg[j * n + p]]
                _insert(&st, buf)
            head += 1
        p = st.count if st.count <= cap else cap + 1
        out = [(<char *>(st.elems + i * n))[:n] for i in range(p)]
    finally:
        free(lg)
        free(rg)
        free(st.elems)
        free(st.keys)
        free(st.slots)
    return out


cdef int _rank(const uint8_t[:] x, Py_ssize_t n):
    cdef uint64_t m = 0
    cdef Py_ssize_t i
    for i in range(n):
        m |= (<uint64_t>1) << x[i]
    cdef int c = 0
    while m:
        m &= m - 1
        c += 1
    return c


def regular_flags(elements, candidates):
    cdef Py_ssize_t ne = len(elements), nc = len(candidates), n, i, j, k, r
    cdef bytearray out = bytearray(ne)
    if ne == 0 or nc == 0:
        return out
    n = len(elements[0])
    cdef uint8_t *cand = <uint8_t *> malloc(nc * n)
    cdef int *crank = <int *> malloc(nc * sizeof(int))
    cdef uint8_t img[256]
    cdef const uint8_t[:] v
    cdef bint ok
    cdef uint64_t m
    try:
        for j in range(nc):
            v = candidates[j]
            for k in range(n):
                cand[j * n + k] = v[k]
            crank[j] = _rank(v, n)
        for i in range(ne):
            v = elements[i]
            m = 0
            for k in range(n):
                m |= (<uint64_t>1) << v[k]
            r = 0
            for k in range(n):
                if m >> k & 1:
                    img[r] = <uint8_t>k
                    r += 1
            for j in range(nc):
                if crank[j] < r:
                    continue
                ok = True
                for k in range(r):
                    if v[cand[j * n + img[k]]] != img[k]:
                        ok = False
                        break
                if ok:
                    out[i] = 1
                    break
    finally:
        free(cand)
        free(crank)
    return out


def collapsible(letters, Py_ssize_t n):
    cdef Py_ssize_t L = len(letters), nn = n * n, v, w, li, x, y, t, p, q
    cdef bytearray flags = bytearray(nn)
    cdef uint8_t[:] f = flags
    if n < 2:
        return flags
    cdef uint8_t *acts = <uint8_t *> malloc(L * n + 1)
    cdef int *count = <int *> calloc(nn + 1, sizeof(int))
    cdef int *start = <int *> calloc(nn + 1, sizeof(int))
    cdef int *edges = <int *> malloc((L * nn + 1) * sizeof(int))
    cdef int *queue = <int *> malloc((nn + 1) * sizeof(int))
    cdef const uint8_t[:] av
    cdef int head = 0, tail = 0
    try:
        for li in range(L):
            av = letters[li]
            for x in range(n):
                acts[li * n + x] = av[x]
        # counting-sort the reverse edges of the pair graph
        for v in range(n):
            for w in range(v + 1, n):
                for li in range(L):
                    x = acts[li * n + v]
                    y = acts[li * n + w]
                    if x != y:
                        if x > y:
                            x, y = y, x
                        count[x * n + y] += 1
        t = 0
        for p in range(nn):
            start[p] = t
            t += count[p]
            count[p] = 0
        start[nn] = t
        for v in range(n):
            for w in range(v + 1, n):
                for li in range(L):
                    x = acts[li * n + v]
                    y = acts[li * n + w]
                    if x == y:
                        if not f[v * n + w]:
                            f[v * n + w] = 1
                            queue[tail] = <int>(v * n + w)
                            tail += 1
                    else:
                        if x > y:
                            x, y = y, x
                        p = x * n + y
                        edges[start[p] + count[p]] = <int>(v * n + w)
                        count[p] += 1
        while head < tail:
            p = queue[head]
            head += 1
            for t in range(start[p], start[p + 1]):
                q = edges[t]
                if not f[q]:
                    f[q] = 1
                    queue[tail] = <int>q
                    tail += 1
        for v in range(n):
            for w in range(v + 1, n):
                f[w * n + v] = f[v * n + w]
    finally:
        free(acts)
        free(count)
        free(start)
        free(edges)
        free(queue)
    return flags


cdef uint64_t *_tables(letters, Py_ssize_t n):
    cdef Py_ssize_t L = len(letters), chunks = (n + 7) // 8, li, c, b, low, p
    cdef uint64_t *tab = <uint64_t *> calloc(L * chunks * 256 + 1, sizeof(uint64_t))
    cdef const uint8_t[:] av
    cdef uint64_t *t
    for li in range(L):
        av = letters[li]
        for c in range(chunks):
            t = tab + (li * chunks + c) * 256
            for b in range(1, 256):
                low = 0
                while not (b >> low) & 1:
                    low += 1
                p = c * 8 + low
                t[b] = t[b & (b - 1)] | (((<uint64_t>1) << av[p]) if p < n else 0)
    return tab


cdef inline uint64_t _apply(uint64_t *tab, Py_ssize_t li, Py_ssize_t chunks, uint64_t m):
    cdef uint64_t out = 0
    cdef Py_ssize_t c = 0
    cdef uint64_t *t = tab + li * chunks * 256
    while m:
        out |= t[c * 256 + (m & 0xFF)]
        m >>= 8
        c += 1
    return out


cdef inline bint _test(uint8_t *bits, uint64_t m):
    return (bits[m >> 3] >> (m & 7)) & 1


cdef inline void _set(uint8_t *bits, uint64_t m):
    bits[m >> 3] |= <uint8_t>(1 << (m & 7))


def shortest_reset(letters, Py_ssize_t n):
    cdef Py_ssize_t L = len(letters), chunks = (n + 7) // 8, cap = 1024, size = 0, head = 0, li, k
    if L == 0:
        return None
    if n == 1:
        return [0]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1, m, y
    cdef uint8_t *bits = <uint8_t *> calloc(((<uint64_t>1) << n) // 8 + 1, 1)
    cdef uint64_t *tab = _tables(letters, n)
    cdef uint64_t *qm = <uint64_t *> malloc(cap * sizeof(uint64_t))
    cdef int64_t *qp = <int64_t *> malloc(cap * sizeof(int64_t))
    cdef uint8_t *ql = <uint8_t *> malloc(cap)
    cdef list word = None
    try:
        qm[0] = full
        qp[0] = -1
        ql[0] = 0
        size = 1
        _set(bits, full)
        while head < size and word is None:
            m = qm[head]
            for li in range(L):
                y = _apply(tab, li, chunks, m)
                if _test(bits, y):
                    continue
                _set(bits, y)
                if size == cap:
                    cap *= 2
                    qm = <uint64_t *> realloc(qm, cap * sizeof(uint64_t))
                    qp = <int64_t *> realloc(qp, cap * sizeof(int64_t))
                    ql = <uint8_t *> realloc(ql, cap)
                qm[size] = y
                qp[size] = head
                ql[size] = <uint8_t>li
                size += 1
                if y & (y - 1) == 0:
                    word = []
                    k = size - 1
                    while qp[k] >= 0:
                        word.append(ql[k])
                        k = qp[k]
                    word.reverse()
                    break
            head += 1
    finally:
        free(bits)
        free(tab)
        free(qm)
        free(qp)
        free(ql)
    return word


cdef int _popcount(uint64_t m):
    cdef int c = 0
    while m:
        m &= m - 1
        c += 1
    return c


def min_image_size(letters, Py_ssize_t n):
    cdef Py_ssize_t L = len(letters), chunks = (n + 7) // 8, cap = 1024, size = 0, head = 0, li
    if L == 0:
        return n
    cdef uint64_t full = ((<uint64_t>1) << n) - 1, m, y
    cdef uint8_t *bits = <uint8_t *> calloc(((<uint64_t>1) << n) // 8 + 1, 1)
    cdef uint64_t *tab = _tables(letters, n)
    cdef uint64_t *qm = <uint64_t *> malloc(cap * sizeof(uint64_t))
    cdef int best = <int>n, c
    try:
        for li in range(L):
            y = _apply(tab, li, chunks, full)
            if not _test(bits, y):
                _set(bits, y)
                qm[size] = y
                size += 1
                c = _popcount(y)
                if c < best:
                    best = c
        while head < size and best > 1:
            m = qm[head]
            head += 1
            for li in range(L):
                y = _apply(tab, li, chunks, m)
                if _test(bits, y):
                    continue
                _set(bits, y)
                if size == cap:
                    cap *= 2
                    qm = <uint64_t *> realloc(qm, cap * sizeof(uint64_t))
                qm[size] = y
                size += 1
                c = _popcount(y)
                if c < best:
                    best = c
    finally:
        free(bits)
        free(tab)
        free(qm)
    return best


def conjugacy_reps(Py_ssize_t n, perms, codes):
    cdef Py_ssize_t G = len(perms), gi, x, i, top
    cdef int64_t total = 1, c, code, y
    for i in range(n):
        total *= n
    if total > (<int64_t>1) << 31:
        from . import _pure
        return _pure.conjugacy_reps(n, perms, codes)
    cdef uint8_t *bits = <uint8_t *> calloc(total // 8 + 1, 1)
    cdef uint8_t *g = <uint8_t *> malloc(G * n + 1)
    cdef uint8_t *ginv = <uint8_t *> malloc(G * n + 1)
    cdef int64_t powers[64]
    cdef uint8_t a[64]
    cdef Py_ssize_t stack_cap = 1024
    cdef int64_t *stack = <int64_t *> malloc(stack_cap * sizeof(int64_t))
    cdef const uint8_t[:] pv
    cdef list reps = []
    try:
        for gi in range(G):
            pv = perms[gi]
            for x in range(n):
                g[gi * n + x] = pv[x]
                ginv[gi * n + pv[x]] = <uint8_t>x
        powers[n - 1] = 1
        for i in range(n - 2, -1, -1):
            powers[i] = powers[i + 1] * n
        for obj in codes:
            c = obj
            if _test(bits, <uint64_t>c):
                continue
            reps.append(c)
            _set(bits, <uint64_t>c)
            stack[0] = c
            top = 1
            while top:
                top -= 1
                code = stack[top]
                for i in range(n - 1, -1, -1):
                    a[i] = <uint8_t>(code % n)
                    code //= n
                for gi in range(G):
                    y = 0
                    for x in range(n):
                        y += g[gi * n + a[ginv[gi * n + x]]] * powers[x]
                    if not _test(bits, <uint64_t>y):
                        _set(bits, <uint64_t>y)
                        if top == stack_cap:
                            stack_cap *= 2
                            stack = <int64_t *> realloc(stack, stack_cap * sizeof(int64_t))
                        stack[top] = y
                        top += 1
    finally:
        free(bits)
        free(g)
        free(ginv)
        free(stack)
    return reps
