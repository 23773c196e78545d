"""Pure-Python reflection kernel (fallback for the compiled ``_ckernel``).

An element state packs the matrices of ``w`` and ``w^-1`` in the geometric
representation.  Both are ``n x n`` arrays of ring pairs ``(a, b)``, stored
row-major and flattened into one tuple of ``4*n*n`` integers:
``M`` occupies ``[0, 2n^2)`` and ``M^-1`` occupies ``[2n^2, 4n^2)``.

Column ``j`` of ``M`` is ``w(alpha_j)`` in simple-root coordinates, so ``s`` is a
right descent iff that column is a negative root; left descents read the
columns of ``M^-1``.
"""

from __future__ import annotations

from .rings import pair_sign

__all__ = ["PyKernel"]


def _mulc(code: int, a: int, b: int) -> tuple[int, int]:
    # multiply (a, b) by 2cos(pi/m): 1, sqrt2, phi, 2
    if code == 1:
        return a, b
    if code == 2:
        return 2 * b, a
    if code == 3:
        return b, a + b
    return 2 * a, 2 * b


class PyKernel:
    name = "python"

    def __init__(self, n: int, ring_code: int, codes: list[list[int]]) -> None:
        self.n = n
        self.ring_code = ring_code
        self.codes = tuple(tuple(r) for r in codes)
        self.nbrs = tuple(
            tuple((k, codes[u][k]) for k in range(n) if k != u and codes[u][k]) for u in range(n)
        )
        self.half = 2 * n * n

    # -- raw matrix operations (in place on a list) -------------------------
    def _colop(self, st: list[int], base: int, u: int) -> None:
        """M <- M * sigma_u on the matrix stored at ``base``."""
        n = self.n
        for k, c in self.nbrs[u]:
            for i in range(n):
                pu = base + 2 * (i * n + u)
                a, b = st[pu], st[pu + 1]
                if a or b:
                    x, y = _mulc(c, a, b)
                    pk = base + 2 * (i * n + k)
                    st[pk] += x
                    st[pk + 1] += y
        for i in range(n):
            pu = base + 2 * (i * n + u)
            st[pu] = -st[pu]
            st[pu + 1] = -st[pu + 1]

    def _rowop(self, st: list[int], base: int, u: int) -> None:
        """M <- sigma_u * M on the matrix stored at ``base``."""
        n = self.n
        ru = base + 2 * u * n
        new = [-x for x in st[ru : ru + 2 * n]]
        for k, c in self.nbrs[u]:
            rk = base + 2 * k * n
            for j in range(n):
                a, b = st[rk + 2 * j], st[rk + 2 * j + 1]
                if a or b:
                    x, y = _mulc(c, a, b)
                    new[2 * j] += x
                    new[2 * j + 1] += y
        st[ru : ru + 2 * n] = new

    def _colneg(self, st, base: int, s: int) -> bool:
        n = self.n
        for i in range(n):
            p = base + 2 * (i * n + s)
            a, b = st[p], st[p + 1]
            if a or b:
                return pair_sign(a, b, self.ring_code) < 0
        raise ArithmeticError("zero column in a reflection matrix")

    # -- public API ------------------------------------------------------------
    def identity(self) -> tuple[int, ...]:
        n = self.n
        st = [0] * (4 * n * n)
        for i in range(n):
            st[2 * (i * n + i)] = 1
            st[self.half + 2 * (i * n + i)] = 1
        return tuple(st)

    def rmul(self, state, u: int):
        st = list(state)
        self._colop(st, 0, u)
        self._rowop(st, self.half, u)
        return tuple(st)

    def lmul(self, state, u: int):
        st = list(state)
        self._rowop(st, 0, u)
        self._colop(st, self.half, u)
        return tuple(st)

    def rmul_word(self, state, word):
        st = list(state)
        for u in word:
            self._colop(st, 0, u)
            self._rowop(st, self.half, u)
        return tuple(st)

    def lmul_word(self, state, word):
        """Left-multiply by the letters of ``word`` taken right to left (i.e. by the word)."""
        st = list(state)
        for u in reversed(word):
            self._rowop(st, 0, u)
            self._colop(st, self.half, u)
        return tuple(st)

    def inverse(self, state):
        h = self.half
        return state[h:] + state[:h]

    def is_rdes(self, state, s: int) -> bool:
        return self._colneg(state, 0, s)

    def is_ldes(self, state, s: int) -> bool:
        return self._colneg(state, self.half, s)

    def rdes(self, state) -> int:
        mask = 0
        for s in range(self.n):
            if self._colneg(state, 0, s):
                mask |= 1 << s
        return mask

    def ldes(self, state) -> int:
        mask = 0
        for s in range(self.n):
            if self._colneg(state, self.half, s):
                mask |= 1 << s
        return mask

    def _tail(self, state, base: int, s: int, t: int, m: int) -> tuple[int, int]:
        ds = self._colneg(state, base, s)
        dt = self._colneg(state, base, t)
        if ds and dt:
            return m, -1
        if not ds and not dt:
            return 0, -1
        n = self.n
        c = self.codes[s][t]
        cs = [state[base + 2 * (i * n + s) + d] for i in range(n) for d in (0, 1)]
        ct = [state[base + 2 * (i * n + t) + d] for i in range(n) for d in (0, 1)]
        e = s if ds else t
        cur, oth = (cs, ct) if ds else (ct, cs)
        i = 0
        while True:
            for r in range(0, 2 * n, 2):
                a, b = cur[r], cur[r + 1]
                if a or b:
                    x, y = _mulc(c, a, b)
                    oth[r] += x
                    oth[r + 1] += y
                    cur[r] = -a
                    cur[r + 1] = -b
            i += 1
            if m and i >= m:
                break
            neg = False
            for r in range(0, 2 * n, 2):
                a, b = oth[r], oth[r + 1]
                if a or b:
                    neg = pair_sign(a, b, self.ring_code) < 0
                    break
            if not neg:
                break
            cur, oth = oth, cur
        return i, e

    def rtail(self, state, s: int, t: int, m: int) -> tuple[int, int]:
        """Length ``i`` of the dihedral factor ``w_I`` in ``w = w^I w_I`` and its last letter.

        ``m`` is the bond (0 for infinity).  The letter is -1 when ``i`` is 0 or
        when both generators are descents (then ``i == m``).
        """
        return self._tail(state, 0, s, t, m)

    def ltail(self, state, s: int, t: int, m: int) -> tuple[int, int]:
        return self._tail(state, self.half, s, t, m)

    def reduce_left(self, state) -> list[int]:
        """Canonical word: strip the smallest left descent until the identity is reached."""
        n = self.n
        h = self.half
        work = list(state[h:])
        out: list[int] = []
        while True:
            for s in range(n):
                if self._colneg(work, 0, s):
                    break
            else:
                return out
            out.append(s)
            self._colop(work, 0, s)

    def length(self, state) -> int:
        return len(self.reduce_left(state))

    def matrix(self, state) -> list[list[tuple[int, int]]]:
        n = self.n
        return [[(state[2 * (i * n + j)], state[2 * (i * n + j) + 1]) for j in range(n)] for i in range(n)]
