"""Dynamic 2D orthogonal range-minimum index over a fixed point grid.

The point set is fixed at build time; only values change.  Supported
operations: value update, deactivate/reactivate, and closed-rectangle
minimum queries.  Ties break toward the smallest point id, which keeps
every consumer deterministic.

Two backends share one interface: a flat scan for small sets and a
static tree over alpha ranks whose nodes carry secondary minimum trees
over beta ranks (O(log^2 n) per operation) for large ones.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right

INF = 1 << 40  # value strictly above any real value
_ID_BITS = 21
_ID_SPAN = 1 << _ID_BITS
_INF_KEY = INF << _ID_BITS

# Scan wins below this size in CPython; the tree's log^2 beats it above.
SCAN_MAX = 64


class RangeMinError(Exception):
    pass


class DuplicateRank(RangeMinError):
    pass


class UnknownId(RangeMinError):
    pass


class RangeMinIndex:
    """Rectangle-minimum index; see module docstring."""

    def __init__(self, points, backend: str | None = None):
        pts = sorted(points)  # ascending id; storage index == id order
        ids = [p[0] for p in pts]
        if len(set(ids)) != len(ids):
            raise DuplicateRank("duplicate point id")
        alphas = [p[1] for p in pts]
        betas = [p[2] for p in pts]
        if len(set(alphas)) != len(alphas):
            raise DuplicateRank("alpha ranks must be distinct")
        if len(set(betas)) != len(betas):
            raise DuplicateRank("beta ranks must be distinct")
        self._ids = ids
        self._id2idx = {pid: i for i, pid in enumerate(ids)}
        self._alpha = alphas
        self._beta = betas
        self._value = [p[3] for p in pts]
        self._active = [True] * len(ids)
        if backend is None:
            backend = "scan" if len(ids) <= SCAN_MAX else "tree"
        self._backend = backend
        if backend == "tree":
            self._build_tree()

    def __len__(self) -> int:
        return len(self._ids)

    # -- construction ----------------------------------------------------

    def _key(self, idx: int) -> int:
        if not self._active[idx]:
            return _INF_KEY + idx
        return (self._value[idx] << _ID_BITS) + idx if self._value[idx] < INF else _INF_KEY + idx

    def _build_tree(self) -> None:
        m = len(self._ids)
        order = sorted(range(m), key=lambda i: self._alpha[i])
        self._alpha_sorted = [self._alpha[i] for i in order]
        size = 1
        while size < max(m, 1):
            size <<= 1
        self._size = size
        node_pts: list[list[int]] = [[] for _ in range(2 * size)]
        for pos, idx in enumerate(order):
            node_pts[size + pos] = [idx]
        for node in range(size - 1, 0, -1):
            node_pts[node] = sorted(node_pts[2 * node] + node_pts[2 * node + 1], key=lambda i: self._beta[i])
        self._node_betas = [[self._beta[i] for i in pts] for pts in node_pts]
        inners = []
        for pts in node_pts:
            w = len(pts)
            arr = [_INF_KEY] * (2 * w)
            for pos, idx in enumerate(pts):
                arr[w + pos] = self._key(idx)
            for i in range(w - 1, 0, -1):
                a, b = arr[2 * i], arr[2 * i + 1]
                arr[i] = a if a < b else b
            inners.append(arr)
        self._inner = inners
        paths: list[list[tuple[int, int]]] = [[] for _ in range(m)]
        for pos, idx in enumerate(order):
            node = size + pos
            while node:
                paths[idx].append((node, bisect_left(self._node_betas[node], self._beta[idx])))
                node >>= 1
        self._paths = paths

    # -- mutation ---------------------------------------------------------

    def _idx(self, point_id) -> int:
        try:
            return self._id2idx[point_id]
        except KeyError:
            raise UnknownId(f"no point with id {point_id!r}")

    def _write(self, idx: int) -> None:
        if self._backend != "tree":
            return
        key = self._key(idx)
        inner = self._inner
        for node, pos in self._paths[idx]:
            arr = inner[node]
            w = len(arr) >> 1
            i = w + pos
            arr[i] = key
            i >>= 1
            while i:
                j = i + i
                v = arr[j] if arr[j] < arr[j + 1] else arr[j + 1]
                if arr[i] == v:
                    break
                arr[i] = v
                i >>= 1

    def update(self, point_id, new_value: int) -> None:
        idx = self._idx(point_id)
        self._value[idx] = new_value
        if self._active[idx]:
            self._write(idx)

    def deactivate(self, point_id) -> None:
        idx = self._idx(point_id)
        if self._active[idx]:
            self._active[idx] = False
            self._write(idx)

    def reactivate(self, point_id) -> None:
        idx = self._idx(point_id)
        if not self._active[idx]:
            self._active[idx] = True
            self._write(idx)

    def value_of(self, point_id) -> int:
        return self._value[self._idx(point_id)]

    def is_active(self, point_id) -> bool:
        return self._active[self._idx(point_id)]

    # -- queries ----------------------------------------------------------

    def query_min(self, alpha_lo: int, alpha_hi: int, beta_lo: int, beta_hi: int):
        """Minimum-value active point in the closed rectangle, or None.

        Ties break to the smallest id.
        """
        if alpha_lo > alpha_hi or beta_lo > beta_hi:
            return None
        if self._backend == "tree":
            best = self._query_tree(alpha_lo, alpha_hi, beta_lo, beta_hi)
        else:
            best = self._query_scan(alpha_lo, alpha_hi, beta_lo, beta_hi)
        if best >= _INF_KEY:
            return None
        idx = best & (_ID_SPAN - 1)
        return (self._ids[idx], self._value[idx])

    def _query_scan(self, alpha_lo, alpha_hi, beta_lo, beta_hi) -> int:
        best = _INF_KEY
        alpha = self._alpha
        beta = self._beta
        value = self._value
        active = self._active
        for idx in range(len(alpha)):
            if active[idx] and alpha_lo <= alpha[idx] <= alpha_hi and beta_lo <= beta[idx] <= beta_hi:
                v = value[idx]
                if v < INF:
                    key = (v << _ID_BITS) + idx
                    if key < best:
                        best = key
        return best

    def _query_tree(self, alpha_lo, alpha_hi, beta_lo, beta_hi) -> int:
        asort = self._alpha_sorted
        lpos = bisect_left(asort, alpha_lo)
        rpos = bisect_right(asort, alpha_hi)
        if lpos >= rpos:
            return _INF_KEY
        best = _INF_KEY
        node_betas = self._node_betas
        inner = self._inner
        l = self._size + lpos
        r = self._size + rpos
        while l < r:
            if l & 1:
                nb = node_betas[l]
                bl = bisect_left(nb, beta_lo)
                br = bisect_right(nb, beta_hi)
                if bl < br:
                    arr = inner[l]
                    w = len(arr) >> 1
                    a, b = bl + w, br + w
                    while a < b:
                        if a & 1:
                            if arr[a] < best:
                                best = arr[a]
                            a += 1
                        if b & 1:
                            b -= 1
                            if arr[b] < best:
                                best = arr[b]
                        a >>= 1
                        b >>= 1
                l += 1
            if r & 1:
                r -= 1
                nb = node_betas[r]
                bl = bisect_left(nb, beta_lo)
                br = bisect_right(nb, beta_hi)
                if bl < br:
                    arr = inner[r]
                    w = len(arr) >> 1
                    a, b = bl + w, br + w
                    while a < b:
                        if a & 1:
                            if arr[a] < best:
                                best = arr[a]
                            a += 1
                        if b & 1:
                            b -= 1
                            if arr[b] < best:
                                best = arr[b]
                        a >>= 1
                        b >>= 1
            l >>= 1
            r >>= 1
        return best


def build(points, backend: str | None = None) -> RangeMinIndex:
    """Build an index from (id, alpha_rank, beta_rank, initial_value) rows."""
    return RangeMinIndex(points, backend)
