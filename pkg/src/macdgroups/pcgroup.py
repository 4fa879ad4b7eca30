"""The groups J, H, K and exact arithmetic on A^i B^j C^k normal forms.

Presentations (C denotes [A,B] throughout, alpha = 1 + ell * p^m):

    J = < A,B | A^[A,B] = A^alpha, B^[B,A] = B^alpha, A^(p^3m) = B^(p^3m) = 1 >
    H = J/Z(J):  as J but with A^(p^2m) = B^(p^2m) = 1
    K = H/Z(H):  as H plus [A,B]^(p^m) = 1

Every element has a unique normal form A^i B^j C^k with i < nA, j < nB,
k < nC.  Multiplication is collection: the engine pushes letters of the right
operand through the left one using only the rewrite rules forced by the
presentation,

    B A = A B C^-1,    C A = A^(alpha^-1) C,    C B = B^alpha C,

together with the torsion folds A^nA = 1, C^nC = 1 and, in J,
B^(p^2m) = A^(-p^2m) (a central element, so the fold commutes with
everything).  Internally words are kept in A-C-B order, where a single
right-letter costs O(1) table lookups; see _acb below.

Two engines are exposed.  ``multiply_naive`` consumes the right operand one
letter at a time and is the reference semantics.  ``multiply`` is the batched
default: it crosses whole letter blocks using closed forms built from
geometric sums and is bit-identical to the naive engine (enforced by the test
suite, exhaustively on K at (p,m) = (3,1)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .residue import RESIDUE_CAP, geom_sum, is_odd_prime, mod_inv, mod_pow, vp

KINDS = ("J", "H", "K")

# Groups whose working modulus fits under this bound get small lookup tables
# for the collection engine; everything stays correct (just slower) above it.
TABLE_CAP = 1 << 16


class InvalidParameters(ValueError):
    """Rejected (p, m, alpha, kind); the message names the violated constraint."""


class MixedGroupError(ValueError):
    """Raised when elements of distinct groups meet in one operation."""


@dataclass(frozen=True)
class GroupParams:
    p: int
    m: int
    alpha: int
    kind: str


@dataclass(frozen=True)
class Element:
    """Canonical exponent triple: the element A^i B^j C^k of its group."""

    group: "Group" = field(repr=False, compare=False)
    i: int
    j: int
    k: int

    def __post_init__(self):
        g = self.group
        if not (0 <= self.i < g.nA and 0 <= self.j < g.nB and 0 <= self.k < g.nC):
            raise ValueError(f"exponents out of canonical range: {(self.i, self.j, self.k)}")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.group.params == other.group.params
            and self.triple == other.triple
        )

    def __hash__(self) -> int:
        return hash((self.group.params, self.i, self.j, self.k))

    def __repr__(self) -> str:
        return f"A^{self.i} B^{self.j} C^{self.k}"


class Group:
    """One of J, H, K for validated (p, m, alpha), with its collection engine.

    Immutable after construction; all operations are read-only and safe to
    share between threads.
    """

    def __init__(self, params: GroupParams):
        p, m, alpha, kind = params.p, params.m, params.alpha, params.kind
        self.params = params
        self.p = p
        self.m = m
        self.alpha = alpha
        self.kind = kind
        self.ell = (alpha - 1) // p**m

        pm = p**m
        p2m = pm * pm
        p3m = p2m * pm
        if kind == "J":
            self.nA, self.nB, self.nC = p3m, p2m, p2m
        elif kind == "H":
            self.nA, self.nB, self.nC = p2m, p2m, p2m
        else:
            self.nA, self.nB, self.nC = p2m, p2m, pm
        self.pm = pm
        # Working modulus for A- and B-exponents.  B has true order nA in J
        # (B^(p^2m) = A^(-p^2m) != 1); the canonical j-range is still nB.
        self.W = self.nA
        # alpha^PER = 1 mod W, so conjugation exponents reduce mod PER.
        self.PER = p2m
        self.order = self.nA * self.nB * self.nC
        self.alpha_inv = mod_inv(alpha, self.W)

        self._tables = None
        if self.W <= TABLE_CAP:
            self._build_tables()

    # -- construction-time tables ------------------------------------------

    def _build_tables(self):
        W, nC, PER = self.W, self.nC, self.PER
        a, ai = self.alpha % W, self.alpha_inv
        apow = [1] * PER
        apow_inv = [1] * PER
        for e in range(1, PER):
            apow[e] = apow[e - 1] * a % W
            apow_inv[e] = apow_inv[e - 1] * ai % W
        # geom(alpha^-1, t) cumulative, then x(t): the central A-correction
        # picked up when one B crosses the block A^t (exact in all kinds).
        ginv = 0
        xtab = [0] * W
        gcum = [0] * W
        for t in range(W):
            gcum[t] = ginv
            xtab[t] = (t - ginv) * apow[t % PER] % W
            ginv = (1 + ai * ginv) % W
        # ba_cross[j]: new B-exponent after one A crosses B^j, = alpha * geom(alpha, j).
        bacross = [0] * W
        gfwd = 0
        for j in range(W):
            bacross[j] = a * gfwd % W
            gfwd = (1 + a * gfwd) % W
        self._tables = {
            "apow": apow,
            "apow_inv": apow_inv,
            "xtab": xtab,
            "gcum": gcum,
            "bacross": bacross,
        }

    def _apow(self, e: int) -> int:
        e %= self.PER
        if self._tables:
            return self._tables["apow"][e]
        return mod_pow(self.alpha, e, self.W)

    def _apow_inv(self, e: int) -> int:
        e %= self.PER
        if self._tables:
            return self._tables["apow_inv"][e]
        return mod_pow(self.alpha_inv, e, self.W)

    def _xval(self, t: int) -> int:
        # x(t) = (t - geom(alpha^-1, t)) * alpha^t mod W; A^x is the exact
        # central correction in B * A^t = A^(t+x) * (collected tail).
        if self._tables:
            return self._tables["xtab"][t]
        g = geom_sum(self.alpha_inv, t, self.W)
        return (t - g) * self._apow(t) % self.W

    def _bacross(self, j: int) -> int:
        if self._tables:
            return self._tables["bacross"][j]
        return self.alpha * geom_sum(self.alpha, j, self.W) % self.W

    # -- the collection engine on raw (I, K, Jb) states ---------------------
    #
    # A state (I, K, Jb) stands for the word A^I C^K B^Jb with I, Jb < W and
    # K < nC.  Conversions to and from normal form cross the B-block over the
    # C-block, which only multiplies the B-exponent by a power of alpha.

    def _fold(self, I: int, Jb: int) -> tuple[int, int]:
        # B^Jb = B^(Jb mod nB) * A^(-nB * carry): the overflow is central.
        q, r = divmod(Jb, self.nB)
        if q:
            I = (I - q * self.nB) % self.W
        return I, r

    def _acb(self, i: int, j: int, k: int) -> tuple[int, int, int]:
        I, Jb = self._fold(i, j * self._apow_inv(k) % self.W)
        return I, k, Jb

    def _nf(self, I: int, K: int, Jb: int) -> tuple[int, int, int]:
        I, j = self._fold(I, Jb * self._apow(K) % self.W)
        return I, j, K

    def _step_a(self, I: int, K: int, Jb: int) -> tuple[int, int, int]:
        I = (I + self._apow_inv(K)) % self.W
        K2 = (K - Jb) % self.nC
        I, Jb2 = self._fold(I, self._bacross(Jb))
        return I, K2, Jb2

    def _consume_a(self, I: int, K: int, Jb: int, t: int) -> tuple[int, int, int]:
        t %= self.W
        lo = t % self.pm
        for _ in range(lo):
            I, K, Jb = self._step_a(I, K, Jb)
        a = t - lo
        if a:
            # Block crossing B^Jb A^a for p^m | a.  Then A^(x(a)) is central,
            # so (B A^x C^-a)^Jb collapses to geometric sums.
            w = (a + Jb * self._xval(a)) % self.W
            sigma = geom_sum(self._apow_inv(a), Jb, self.W)
            I = (I + w * self._apow_inv(K)) % self.W
            K2 = (K - Jb * a) % self.nC
            I, Jb = self._fold(I, sigma * self._apow(Jb * a) % self.W)
            K = K2
        return I, K, Jb

    def _consume_b(self, I: int, K: int, Jb: int, t: int) -> tuple[int, int, int]:
        I, Jb = self._fold(I, (Jb + t) % self.W)
        return I, K, Jb

    def _consume_c(self, I: int, K: int, Jb: int, t: int) -> tuple[int, int, int]:
        K = (K + t) % self.nC
        I, Jb = self._fold(I, Jb * self._apow_inv(t) % self.W)
        return I, K, Jb

    def _mul_raw(self, g: tuple[int, int, int], h: tuple[int, int, int]) -> tuple[int, int, int]:
        I, K, Jb = self._acb(*g)
        I, K, Jb = self._consume_a(I, K, Jb, h[0])
        I, K, Jb = self._consume_b(I, K, Jb, h[1])
        I, K, Jb = self._consume_c(I, K, Jb, h[2])
        return self._nf(I, K, Jb)

    def _inv_raw(self, g: tuple[int, int, int]) -> tuple[int, int, int]:
        # g^-1 = C^-k B^-j A^-i, consumed letterwise from the identity.
        i, j, k = g
        I, K, Jb = 0, 0, 0
        I, K, Jb = self._consume_c(I, K, Jb, (-k) % self.nC)
        I, K, Jb = self._consume_b(I, K, Jb, (-j) % self.W)
        I, K, Jb = self._consume_a(I, K, Jb, (-i) % self.W)
        return self._nf(I, K, Jb)

    # -- public element API --------------------------------------------------

    def element(self, i: int, j: int, k: int) -> Element:
        return Element(self, i % self.nA, j % self.nB, k % self.nC)

    def identity(self) -> Element:
        return Element(self, 0, 0, 0)

    @property
    def A(self) -> Element:
        return Element(self, 1 % self.nA, 0, 0)

    @property
    def B(self) -> Element:
        return Element(self, 0, 1 % self.nB, 0)

    @property
    def C(self) -> Element:
        return Element(self, 0, 0, 1 % self.nC)

    def _check_own(self, *gs: Element):
        for g in gs:
            if g.group.params != self.params:
                raise MixedGroupError(f"element of {g.group.params} used in {self.params}")

    def multiply(self, g: Element, h: Element) -> Element:
        self._check_own(g, h)
        return Element(self, *self._mul_raw(g.triple, h.triple))

    def multiply_naive(self, g: Element, h: Element) -> Element:
        """Single-letter left-to-right collection; the oracle for multiply."""
        self._check_own(g, h)
        I, K, Jb = self._acb(*g.triple)
        for _ in range(h.i):
            I, K, Jb = self._step_a(I, K, Jb)
        for _ in range(h.j):
            I, K, Jb = self._consume_b(I, K, Jb, 1)
        for _ in range(h.k):
            I, K, Jb = self._consume_c(I, K, Jb, 1)
        return Element(self, *self._nf(I, K, Jb))

    def inverse(self, g: Element) -> Element:
        self._check_own(g)
        return Element(self, *self._inv_raw(g.triple))

    def power(self, g: Element, n: int) -> Element:
        self._check_own(g)
        if n < 0:
            g, n = self.inverse(g), -n
        acc = (0, 0, 0)
        base = g.triple
        while n:
            if n & 1:
                acc = self._mul_raw(acc, base)
            base = self._mul_raw(base, base)
            n >>= 1
        return Element(self, *acc)

    def conjugate(self, g: Element, h: Element) -> Element:
        """h^-1 g h."""
        self._check_own(g, h)
        hi = self._inv_raw(h.triple)
        return Element(self, *self._mul_raw(self._mul_raw(hi, g.triple), h.triple))

    def commutator(self, g: Element, h: Element) -> Element:
        """g^-1 h^-1 g h."""
        self._check_own(g, h)
        hg = self._mul_raw(h.triple, g.triple)
        gh = self._mul_raw(g.triple, h.triple)
        return Element(self, *self._mul_raw(self._inv_raw(hg), gh))

    def element_order(self, g: Element) -> int:
        self._check_own(g)
        t = 0
        while g.triple != (0, 0, 0):
            g = self.power(g, self.p)
            t += 1
        return self.p**t

    # -- mixed-radix indexing: i outer, j middle, k inner --------------------

    def index(self, g: Element) -> int:
        self._check_own(g)
        return (g.i * self.nB + g.j) * self.nC + g.k

    def unindex(self, n: int) -> Element:
        if not 0 <= n < self.order:
            raise IndexError(f"element index {n} out of range [0, {self.order})")
        n, k = divmod(n, self.nC)
        i, j = divmod(n, self.nB)
        return Element(self, i, j, k)

    def elements(self) -> Iterator[Element]:
        for n in range(self.order):
            yield self.unindex(n)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        p = self.params
        return f"{p.kind}(p={p.p}, m={p.m}, alpha={p.alpha})"


def validate_params(p: int, m: int, alpha: int, kind: str) -> GroupParams:
    if kind not in KINDS:
        raise InvalidParameters(f"kind must be one of {KINDS}, got {kind!r}")
    if not is_odd_prime(p):
        raise InvalidParameters(f"p must be an odd prime, got {p}")
    if m < 1:
        raise InvalidParameters(f"m must be a positive integer, got {m}")
    if alpha <= 1:
        raise InvalidParameters(f"alpha must exceed 1, got {alpha}")
    if vp(alpha - 1, p) != m:
        raise InvalidParameters(
            f"v_{p}(alpha - 1) = {vp(alpha - 1, p)} but must equal m = {m}"
        )
    ell = (alpha - 1) // p**m
    if p == 3 and m == 1 and ell % 3 != 1:
        raise InvalidParameters(
            f"excluded case: for p = 3, m = 1 the cofactor (alpha-1)/3 = {ell} "
            "must be 1 mod 3"
        )
    if p ** (3 * m) >= RESIDUE_CAP:
        raise InvalidParameters(
            f"p^(3m) = {p ** (3 * m)} exceeds the supported modulus cap 2^40"
        )
    return GroupParams(p, m, alpha, kind)


def _verify_presentation_relations(g: Group):
    """Defining relations must hold under engine arithmetic before release."""
    A, B = g.A, g.B
    C = g.commutator(A, B)
    assert C == g.C, "C = [A, B] failed"
    assert g.conjugate(A, C) == g.power(A, g.alpha), "A^[A,B] = A^alpha failed"
    Cinv = g.inverse(C)
    assert g.conjugate(B, Cinv) == g.power(B, g.alpha), "B^[B,A] = B^alpha failed"
    if g.kind == "J":
        n = g.p ** (3 * g.m)
        assert g.power(A, n) == g.identity() and g.power(B, n) == g.identity()
        # The quotient relation A^(p^2m) B^(p^2m) = 1 folds B-overflow into A.
        n2 = g.p ** (2 * g.m)
        assert g.multiply(g.power(A, n2), g.power(B, n2)) == g.identity()
    else:
        n = g.p ** (2 * g.m)
        assert g.power(A, n) == g.identity() and g.power(B, n) == g.identity()
    if g.kind == "K":
        assert g.power(C, g.pm) == g.identity(), "[A,B]^(p^m) = 1 failed"


@lru_cache(maxsize=None)
def _make_group_cached(params: GroupParams) -> Group:
    g = Group(params)
    _verify_presentation_relations(g)
    return g


def make_group(p: int, m: int, alpha: int, kind: str) -> Group:
    """Construct J, H or K for validated (p, m, alpha); groups are cached."""
    return _make_group_cached(validate_params(p, m, alpha, kind))
