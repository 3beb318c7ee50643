"""Pure-Python kernels; the reference behaviour for the compiled module.

Transformations are ``bytes`` of images. Subsets of states are int bitmasks.
Every function here has a twin of the same name and signature in ``_fast``.
"""
from __future__ import annotations

from collections import deque

BACKEND = "python"


def closure(seeds, left, right, cap):
    """BFS closure of ``seeds`` under ``x -> x*r`` (r in right) and ``x -> l*x`` (l in left).

    Returns elements in discovery order. Stops once more than ``cap`` elements
    are known, so a result longer than ``cap`` means the cap was hit.
    """
    seen = {}
    for s in seeds:
        if s not in seen:
            seen[s] = None
    order = list(seen)
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for r in right:
            y = bytes([r[p] for p in x])
            if y not in seen:
                seen[y] = None
                order.append(y)
        for l in left:
            y = bytes([x[p] for p in l])
            if y not in seen:
                seen[y] = None
                order.append(y)
        if len(order) > cap:
            return order[: cap + 1]
    return order


def regular_flags(elements, candidates):
    """Flag each x with some y among ``candidates`` satisfying ``xyx == x``."""
    out = bytearray(len(elements))
    for idx, x in enumerate(elements):
        img = sorted(set(x))
        r = len(img)
        for y in candidates:
            if len(set(y)) < r:
                continue
            for p in img:
                if x[y[p]] != p:
                    break
            else:
                out[idx] = 1
                break
    return out


def collapsible(letters, n):
    """Flags ``[v*n + w]`` set when some nonempty word sends v and w to one state."""
    flags = bytearray(n * n)
    preimages = [[] for _ in range(n * n)]
    queue = deque()
    for v in range(n):
        for w in range(v + 1, n):
            for a in letters:
                x, y = a[v], a[w]
                if x == y:
                    if not flags[v * n + w]:
                        flags[v * n + w] = 1
                        queue.append(v * n + w)
                else:
                    if x > y:
                        x, y = y, x
                    preimages[x * n + y].append(v * n + w)
    while queue:
        p = queue.popleft()
        for q in preimages[p]:
            if not flags[q]:
                flags[q] = 1
                queue.append(q)
    for v in range(n):
        for w in range(v + 1, n):
            flags[w * n + v] = flags[v * n + w]
    return flags


def _image_masks(letters, n):
    out = []
    for a in letters:
        # per-byte lookup tables: image mask of every 8-bit chunk of the domain
        tables = []
        for chunk in range(0, n, 8):
            t = [0] * 256
            for b in range(1, 256):
                low = (b & -b).bit_length() - 1
                p = chunk + low
                t[b] = t[b & (b - 1)] | ((1 << a[p]) if p < n else 0)
            tables.append(t)
        out.append(tables)
    return out


def _apply(tables, mask):
    out = 0
    i = 0
    while mask:
        out |= tables[i][mask & 0xFF]
        mask >>= 8
        i += 1
    return out


def shortest_reset(letters, n):
    """Letter indices of the lex-least shortest word with singleton image, or None."""
    if not letters:
        return None
    if n == 1:
        return [0]
    tables = _image_masks(letters, n)
    full = (1 << n) - 1
    parent = {full: None}
    frontier = [full]
    while frontier:
        nxt = []
        for m in frontier:
            for li, t in enumerate(tables):
                y = _apply(t, m)
                if y in parent:
                    continue
                parent[y] = (m, li)
                if y & (y - 1) == 0:
                    word = []
                    while parent[y] is not None:
                        y, li2 = parent[y]
                        word.append(li2)
                    return word[::-1]
                nxt.append(y)
        frontier = nxt
    return None


def min_image_size(letters, n):
    """Least |Ω·w| over nonempty words w."""
    if not letters:
        return n
    tables = _image_masks(letters, n)
    full = (1 << n) - 1
    seen = set()
    frontier = []
    for t in tables:
        y = _apply(t, full)
        if y not in seen:
            seen.add(y)
            frontier.append(y)
    best = min(bin(m).count("1") for m in seen)
    while frontier and best > 1:
        nxt = []
        for m in frontier:
            for t in tables:
                y = _apply(t, m)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    c = bin(y).count("1")
                    if c < best:
                        best = c
        frontier = nxt
    return best


def conjugacy_reps(n, perms, codes):
    """Least code of every orbit of ``a -> g⁻¹ a g`` meeting ``codes``.

    ``codes`` must be ascending and closed under the conjugation action; the
    code of a map is its image sequence read as a base-n number.
    """
    invs = []
    for g in perms:
        inv = [0] * n
        for i, x in enumerate(g):
            inv[x] = i
        invs.append(inv)
    powers = [n ** (n - 1 - i) for i in range(n)]
    seen = set()
    reps = []
    for c in codes:
        if c in seen:
            continue
        reps.append(c)
        seen.add(c)
        stack = [c]
        while stack:
            code = stack.pop()
            a = [0] * n
            for i in range(n - 1, -1, -1):
                code, a[i] = divmod(code, n)
            for g, gi in zip(perms, invs):
                y = 0
                for x in range(n):
                    y += g[a[gi[x]]] * powers[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return reps
