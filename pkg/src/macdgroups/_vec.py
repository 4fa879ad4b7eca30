"""Vectorized (numpy) mirror of the collection engine, for enumeration work.

Everything here operates on int64 component arrays (i, j, k) or on flat
mixed-radix index arrays.  The scalar engine in pcgroup is the semantics;
these kernels implement the same formulas with table gathers and are
cross-checked against it in the tests.  Only groups whose working modulus
fits in 32 bits are supported, which keeps every intermediate product well
inside int64.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from .pcgroup import Element, Group, GroupParams, make_group

_VEC_MODULUS_CAP = 1 << 20


def default_budget() -> int:
    """Element-enumeration budget; MACD_BUDGET overrides the 5e6 default."""
    try:
        return int(os.environ.get("MACD_BUDGET", "") or 5_000_000)
    except ValueError:
        return 5_000_000


class BudgetExceeded(RuntimeError):
    """An enumeration would overrun its element or pair budget."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class VecOps:
    """Numpy tables and array arithmetic for one group."""

    def __init__(self, group: Group):
        if group.W > _VEC_MODULUS_CAP:
            raise BudgetExceeded(f"modulus {group.W} too large for vector kernels")
        self.group = group
        self.W = group.W
        self.nA, self.nB, self.nC = group.nA, group.nB, group.nC
        self.pm = group.pm
        self.PER = group.PER
        self.order = group.order
        if group._tables is None:
            group._build_tables()
        t = group._tables
        self.apow = np.array(t["apow"], dtype=np.int64)
        self.apow_inv = np.array(t["apow_inv"], dtype=np.int64)
        self.xtab = np.array(t["xtab"], dtype=np.int64)
        self.bacross = np.array(t["bacross"], dtype=np.int64)
        self._cayley = None
        self._orders = None
        self._series_masks = None

    # -- elementwise engine --------------------------------------------------

    def _fold(self, I, Jb):
        q, r = np.divmod(Jb, self.nB)
        return (I - q * self.nB) % self.W, r

    def _acb(self, i, j, k):
        I, Jb = self._fold(i, j * self.apow_inv[k % self.PER] % self.W)
        return I, k.astype(np.int64), Jb

    def _nf(self, I, K, Jb):
        I, j = self._fold(I, Jb * self.apow[K % self.PER] % self.W)
        return I, j, K

    def _step_a(self, I, K, Jb, mask=None):
        I2 = (I + self.apow_inv[K % self.PER]) % self.W
        K2 = (K - Jb) % self.nC
        I2, Jb2 = self._fold(I2, self.bacross[Jb])
        if mask is None:
            return I2, K2, Jb2
        return np.where(mask, I2, I), np.where(mask, K2, K), np.where(mask, Jb2, Jb)

    def _vgeom(self, base, n):
        """1 + base + ... + base^(n-1) mod W, elementwise, by doubling."""
        W = self.W
        base = base % W
        s = np.zeros_like(base)
        pw = np.ones_like(base)
        top = int(n.max()) if n.size else 0
        if top == 0:
            return s
        for shift in range(top.bit_length() - 1, -1, -1):
            s = s * (1 + pw) % W
            pw = pw * pw % W
            bit = (n >> shift) & 1
            hi = bit == 1
            s = np.where(hi, (1 + base * s) % W, s)
            pw = np.where(hi, pw * base % W, pw)
        return s

    def _consume_a(self, I, K, Jb, t):
        t = t % self.W
        lo = t % self.pm
        for r in range(self.pm - 1):
            I, K, Jb = self._step_a(I, K, Jb, mask=lo > r)
        a = t - lo
        blk = a > 0
        if np.any(blk):
            w = (a + Jb * self.xtab[a % self.W]) % self.W
            sigma = self._vgeom(self.apow_inv[a % self.PER], np.where(blk, Jb, 0))
            I2 = (I + w * self.apow_inv[K % self.PER]) % self.W
            K2 = (K - Jb * a) % self.nC
            I2, Jb2 = self._fold(I2, sigma * self.apow[Jb * a % self.PER] % self.W)
            I = np.where(blk, I2, I)
            K = np.where(blk, K2, K)
            Jb = np.where(blk, Jb2, Jb)
        return I, K, Jb

    def _consume_b(self, I, K, Jb, t):
        I, Jb = self._fold(I, (Jb + t) % self.W)
        return I, K, Jb

    def _consume_c(self, I, K, Jb, t):
        K = (K + t) % self.nC
        I, Jb = self._fold(I, Jb * self.apow_inv[t % self.PER] % self.W)
        return I, K, Jb

    def vmul(self, g, h):
        """Componentwise product of triples g = (i1,j1,k1), h = (i2,j2,k2)."""
        i1, j1, k1 = (np.asarray(x, dtype=np.int64) for x in g)
        i2, j2, k2 = (np.asarray(x, dtype=np.int64) for x in h)
        i1, j1, k1, i2, j2, k2 = np.broadcast_arrays(i1, j1, k1, i2, j2, k2)
        I, K, Jb = self._acb(i1.copy(), j1, k1.copy())
        I, K, Jb = self._consume_a(I, K, Jb, i2)
        I, K, Jb = self._consume_b(I, K, Jb, j2)
        I, K, Jb = self._consume_c(I, K, Jb, k2)
        return self._nf(I, K, Jb)

    def vinv(self, g):
        i, j, k = (np.asarray(x, dtype=np.int64) for x in g)
        i, j, k = np.broadcast_arrays(i, j, k)
        z = np.zeros_like(i)
        I, K, Jb = z.copy(), z.copy(), z.copy()
        I, K, Jb = self._consume_c(I, K, Jb, (-k) % self.nC)
        I, K, Jb = self._consume_b(I, K, Jb, (-j) % self.W)
        I, K, Jb = self._consume_a(I, K, Jb, (-i) % self.W)
        return self._nf(I, K, Jb)

    def vpow(self, g, e: int):
        """g**e for a fixed integer exponent e >= 0."""
        i, j, k = (np.asarray(x, dtype=np.int64) for x in g)
        i, j, k = np.broadcast_arrays(i, j, k)
        acc = (np.zeros_like(i), np.zeros_like(i), np.zeros_like(i))
        base = (i, j, k)
        while e:
            if e & 1:
                acc = self.vmul(acc, base)
            base = self.vmul(base, base)
            e >>= 1
        return acc

    def vconj(self, g, h):
        """h^-1 g h elementwise."""
        hi = self.vinv(h)
        return self.vmul(self.vmul(hi, g), h)

    def vcomm(self, g, h):
        """[g, h] = g^-1 h^-1 g h elementwise."""
        hg = self.vmul(h, g)
        gh = self.vmul(g, h)
        return self.vmul(self.vinv(hg), gh)

    # -- indexing -------------------------------------------------------------

    def idx(self, g):
        i, j, k = g
        return (i * self.nB + j) * self.nC + k

    def unidx(self, n):
        n = np.asarray(n, dtype=np.int64)
        n, k = np.divmod(n, self.nC)
        i, j = np.divmod(n, self.nB)
        return i, j, k

    def all_elements(self):
        return self.unidx(np.arange(self.order, dtype=np.int64))

    def triple_of(self, g: Element):
        return (np.int64(g.i), np.int64(g.j), np.int64(g.k))

    # -- derived structures ----------------------------------------------------

    def right_mul_perm(self, h: Element):
        """Permutation n -> index(element_n * h) over all of G."""
        g = self.all_elements()
        return self.idx(self.vmul(g, self.triple_of(h)))

    def left_mul_perm(self, h: Element):
        g = self.all_elements()
        return self.idx(self.vmul(self.triple_of(h), g))

    def conj_by_gen_maps(self):
        """Index arrays of [g, A] and [g, B] for every g; cached."""
        g = self.all_elements()
        A = self.triple_of(self.group.A)
        B = self.triple_of(self.group.B)
        return self.idx(self.vcomm(g, A)), self.idx(self.vcomm(g, B))

    def orders(self):
        """Array of element orders (all powers of p)."""
        if self._orders is None:
            p = self.group.p
            pmap = self.idx(self.vpow(self.all_elements(), p))
            o = np.zeros(self.order, dtype=np.int64)
            cur = np.arange(self.order, dtype=np.int64)
            done = cur == 0
            val = 1
            while not done.all():
                val *= p
                cur = pmap[cur]
                hit = (cur == 0) & ~done
                o[hit] = val
                done |= hit
            o[0] = 1
            self._orders = o
        return self._orders

    def cayley_table(self, max_entries=1 << 26):
        """Full multiplication table T[x, y] = index(x * y); cached."""
        if self._cayley is None:
            n = self.order
            if n * n > max_entries:
                raise BudgetExceeded(f"cayley table {n}^2 exceeds {max_entries} entries")
            ra = self.right_mul_perm(self.group.A).astype(np.int32)
            rb = self.right_mul_perm(self.group.B).astype(np.int32)
            rc = self.right_mul_perm(self.group.C).astype(np.int32)
            T = np.empty((n, n), dtype=np.int32)
            T[:, 0] = np.arange(n, dtype=np.int32)
            nB, nC = self.nB, self.nC
            for y in range(1, n):
                k = y % nC
                if k:
                    T[:, y] = rc[T[:, y - 1]]
                elif (y // nC) % nB:
                    T[:, y] = rb[T[:, y - nC]]
                else:
                    T[:, y] = ra[T[:, y - nB * nC]]
            self._cayley = T
        return self._cayley

    def morphism_table(self, imgA: Element, imgB: Element, imgC: Element):
        """T[n] = index(imgA^i imgB^j imgC^k) for n = index(A^i B^j C^k)."""
        n = self.order
        lx = self.left_mul_perm(imgA)
        ly = self.left_mul_perm(imgB)
        T = np.empty((self.nA, self.nB, self.nC), dtype=np.int64)
        g = self.group
        acc = g.identity()
        for k in range(self.nC):
            T[0, 0, k] = g.index(acc)
            acc = g.multiply(acc, imgC)
        for j in range(1, self.nB):
            T[0, j, :] = ly[T[0, j - 1, :]]
        flat = T.reshape(self.nA, -1)
        for i in range(1, self.nA):
            flat[i, :] = lx[flat[i - 1, :]]
        return T.reshape(-1)

    def subgroup_mask(self, indices) -> np.ndarray:
        mask = np.zeros(self.order, dtype=bool)
        mask[np.fromiter(indices, dtype=np.int64, count=len(indices))] = True
        return mask


@lru_cache(maxsize=None)
def _vec_cached(params: GroupParams) -> VecOps:
    return VecOps(make_group(params.p, params.m, params.alpha, params.kind))


def get_vec(group: Group, budget: int | None = None) -> VecOps:
    """VecOps for a group, subject to the element-enumeration budget."""
    budget = default_budget() if budget is None else budget
    if group.order > budget:
        raise BudgetExceeded(
            f"|G| = {group.order} exceeds the enumeration budget {budget}"
        )
    return _vec_cached(group.params)
