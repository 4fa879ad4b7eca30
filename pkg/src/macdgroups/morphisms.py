"""Endomorphisms and automorphisms of J, H, K from validated generator images.

A morphism is stored by its images of A and B; that key determines it
completely since A and B generate.  Construction through hom_from_images
checks every defining relation of the group's kind on the images and refuses
anything else, so a Morphism in hand is always a genuine endomorphism.

Composition reads left to right: compose(f, g) applies f first.
"""

from __future__ import annotations

from .residue import mod_inv
from . import structure
from ._vec import get_vec
from .pcgroup import Element, Group, MixedGroupError


class RelationViolation(ValueError):
    """A candidate image pair breaks a defining relation."""

    def __init__(self, relation: str, observed: Element, expected: Element):
        super().__init__(
            f"relation {relation} fails: observed {observed}, expected {expected}"
        )
        self.relation = relation
        self.observed = observed
        self.expected = expected


class Morphism:
    """An endomorphism recorded by the images of the two generators."""

    __slots__ = ("group", "imgA", "imgB", "imgC", "_chains")

    def __init__(self, group: Group, imgA: Element, imgB: Element):
        group._check_own(imgA, imgB)
        self.group = group
        self.imgA = imgA
        self.imgB = imgB
        self.imgC = group.commutator(imgA, imgB)
        self._chains = None

    @property
    def key(self) -> tuple[int, int]:
        g = self.group
        return (g.index(self.imgA), g.index(self.imgB))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Morphism)
            and self.group.params == other.group.params
            and self.key == other.key
        )

    def __hash__(self) -> int:
        return hash((self.group.params, self.key))

    def __repr__(self) -> str:
        return f"Morphism(A -> {self.imgA}, B -> {self.imgB})"

    def _chain(self, which: int):
        # doubling chains [X, X^2, X^4, ...] per image, built once
        if self._chains is None:
            g = self.group
            chains = []
            for base in (self.imgA, self.imgB, self.imgC):
                bits = max(g.nA, g.nB, g.nC).bit_length()
                chain = [base]
                for _ in range(bits):
                    chain.append(g.multiply(chain[-1], chain[-1]))
                chains.append(chain)
            self._chains = chains
        return self._chains[which]

    def __call__(self, g: Element) -> Element:
        return evaluate(self, g)


def evaluate(phi: Morphism, g: Element) -> Element:
    """phi(A^i B^j C^k) = imgA^i imgB^j imgC^k."""
    G = phi.group
    G._check_own(g)
    acc = G.identity()
    for which, e in ((0, g.i), (1, g.j), (2, g.k)):
        chain = phi._chain(which)
        pos = 0
        while e:
            if e & 1:
                acc = G.multiply(acc, chain[pos])
            pos += 1
            e >>= 1
    return acc


def check_relations(group: Group, x: Element, y: Element) -> str | None:
    """Name of the first violated defining relation, or None if all hold."""
    g = group
    c = g.commutator(x, y)
    lhs = g.conjugate(x, c)
    rhs = g.power(x, g.alpha)
    if lhs != rhs:
        return "A^[A,B] = A^alpha"
    lhs = g.conjugate(y, g.inverse(c))
    rhs = g.power(y, g.alpha)
    if lhs != rhs:
        return "B^[B,A] = B^alpha"
    e = g.identity()
    n = g.p ** (3 * g.m) if g.kind == "J" else g.p ** (2 * g.m)
    if g.power(x, n) != e:
        return f"A^{n} = 1"
    if g.power(y, n) != e:
        return f"B^{n} = 1"
    if g.kind == "K" and g.power(c, g.pm) != e:
        return f"[A,B]^{g.pm} = 1"
    return None


def hom_from_images(group: Group, x: Element, y: Element) -> Morphism:
    """Validate every defining relation on (x, y) and build the morphism."""
    g = group
    g._check_own(x, y)
    c = g.commutator(x, y)
    checks = [
        ("A^[A,B] = A^alpha", g.conjugate(x, c), g.power(x, g.alpha)),
        ("B^[B,A] = B^alpha", g.conjugate(y, g.inverse(c)), g.power(y, g.alpha)),
    ]
    e = g.identity()
    n = g.p ** (3 * g.m) if g.kind == "J" else g.p ** (2 * g.m)
    checks.append((f"A^{n} = 1", g.power(x, n), e))
    checks.append((f"B^{n} = 1", g.power(y, n), e))
    if g.kind == "K":
        checks.append((f"[A,B]^{g.pm} = 1", g.power(c, g.pm), e))
    for name, observed, expected in checks:
        if observed != expected:
            raise RelationViolation(name, observed, expected)
    return Morphism(g, x, y)


def identity_morphism(group: Group) -> Morphism:
    return Morphism(group, group.A, group.B)


def is_automorphism(phi: Morphism, method: str = "frattini") -> bool:
    """True iff the images generate; endomorphism + onto = automorphism."""
    return structure.generates(phi.group, phi.imgA, phi.imgB, method=method)


def compose(phi: Morphism, psi: Morphism) -> Morphism:
    """Apply phi first, then psi."""
    if phi.group.params != psi.group.params:
        raise MixedGroupError("composing morphisms of different groups")
    return Morphism(phi.group, evaluate(psi, phi.imgA), evaluate(psi, phi.imgB))


def morphism_power(phi: Morphism, n: int) -> Morphism:
    acc = identity_morphism(phi.group)
    base = phi
    if n < 0:
        base, n = invert(phi), -n
    while n:
        if n & 1:
            acc = compose(acc, base)
        base = compose(base, base)
        n >>= 1
    return acc


def invert(phi: Morphism) -> Morphism:
    """Invert by building the full permutation table and reading preimages."""
    if not is_automorphism(phi):
        raise ValueError("cannot invert a non-automorphism")
    g = phi.group
    v = get_vec(g)
    table = v.morphism_table(phi.imgA, phi.imgB, phi.imgC)
    import numpy as np

    inv = np.empty_like(table)
    inv[table] = np.arange(table.size)
    return Morphism(g, g.unindex(int(inv[g.index(g.A)])), g.unindex(int(inv[g.index(g.B)])))


def inner(group: Group, g: Element) -> Morphism:
    """Conjugation by g."""
    group._check_own(g)
    return Morphism(group, group.conjugate(group.A, g), group.conjugate(group.B, g))


def aut_level(phi: Morphism) -> int:
    """Least i with phi trivial on G/Z_i; 0 only for the identity map."""
    g = phi.group
    series = structure.upper_central_series(g)
    dA = g.multiply(phi.imgA, g.inverse(g.A))
    dB = g.multiply(phi.imgB, g.inverse(g.B))
    for i, z in enumerate(series):
        if dA in z and dB in z:
            return i
    raise AssertionError("series terminates at G, unreachable")


def induced(phi: Morphism, source: Group, target: Group) -> Morphism:
    """The morphism on the quotient along the canonical projection.

    Verifies projection-compatibility on both generators and a fixed probe
    word before returning.
    """
    if phi.group.params != source.params:
        raise MixedGroupError("induced: morphism does not live on the source group")
    x = structure.project(phi.imgA, source, target)
    y = structure.project(phi.imgB, source, target)
    down = hom_from_images(target, x, y)
    for probe in (
        source.A,
        source.B,
        source.multiply(source.A, source.B),
        source.multiply(source.C, source.power(source.B, 2)),
    ):
        lhs = structure.project(evaluate(phi, probe), source, target)
        rhs = evaluate(down, structure.project(probe, source, target))
        if lhs != rhs:
            raise AssertionError("projection compatibility failed")
    return down


def quotient_matrix(phi: Morphism) -> tuple[tuple[int, int], tuple[int, int]]:
    """Action on K/Z_2(K) as a 2x2 matrix over Z/p^m, row by row."""
    g = phi.group
    if g.kind != "K":
        raise ValueError("quotient matrices are defined for K only")
    pm = g.pm
    return (
        (phi.imgA.i % pm, phi.imgA.j % pm),
        (phi.imgB.i % pm, phi.imgB.j % pm),
    )


# -- explicit constructors ----------------------------------------------------


def _require_kind(group: Group, kind: str, what: str):
    if group.kind != kind:
        raise ValueError(f"{what} is defined on {kind}, not {group.kind}")


def _require_member(group: Group, g: Element, sub: structure.SubgroupSet, what: str):
    if g not in sub:
        raise ValueError(f"{what}: {g} lies outside the required subgroup")


def omega(group: Group, u: Element, v: Element) -> Morphism:
    """Central automorphism of K: a -> au, b -> bv for u, v in Z(K)."""
    _require_kind(group, "K", "omega")
    z = structure.center(group)
    _require_member(group, u, z, "omega")
    _require_member(group, v, z, "omega")
    return hom_from_images(group, group.multiply(group.A, u), group.multiply(group.B, v))


def gamma(group: Group, u: Element, v: Element) -> Morphism:
    """2-central automorphism of K: a -> au, b -> bv for u, v in Z_2(K)."""
    _require_kind(group, "K", "gamma")
    z2 = structure.upper_central_series(group)[2]
    _require_member(group, u, z2, "gamma")
    _require_member(group, v, z2, "gamma")
    return hom_from_images(group, group.multiply(group.A, u), group.multiply(group.B, v))


def f_aut(group: Group, r: int) -> Morphism:
    """Diagonal automorphism of K: a -> a^r, b -> b^s with rs = 1 mod p^2m."""
    _require_kind(group, "K", "f_aut")
    if r % group.p == 0:
        raise ValueError("r must be prime to p")
    s = mod_inv(r, group.p ** (2 * group.m))
    return hom_from_images(group, group.power(group.A, r), group.power(group.B, s))


def swap(group: Group) -> Morphism:
    """The generator interchange A <-> B (mu, nu or theta by kind)."""
    return hom_from_images(group, group.B, group.A)


def pi_aut(group: Group, x: Element, y: Element) -> Morphism:
    """2-central automorphism of H: A -> Ax, B -> By for x, y in Z_2(H)."""
    _require_kind(group, "H", "pi_aut")
    z2 = structure.upper_central_series(group)[2]
    _require_member(group, x, z2, "pi_aut")
    _require_member(group, y, z2, "pi_aut")
    return hom_from_images(group, group.multiply(group.A, x), group.multiply(group.B, y))


def psi_aut(group: Group, x: Element, y: Element) -> Morphism:
    """2-central automorphism of J: A -> Ax, B -> By for x, y in Z_2(J)."""
    _require_kind(group, "J", "psi_aut")
    z2 = structure.upper_central_series(group)[2]
    _require_member(group, x, z2, "psi_aut")
    _require_member(group, y, z2, "psi_aut")
    return hom_from_images(group, group.multiply(group.A, x), group.multiply(group.B, y))


def correction_term(group: Group) -> int:
    """The constant d: zero away from p = 3, else 3^(m-1) * ell."""
    return 0 if group.p != 3 else 3 ** (group.m - 1) * group.ell


def upsilon_family(group: Group, i: int, j: int) -> Morphism:
    """3-central family on J: A -> A^(1+i p^m) B^(j p^m), B -> B^(1+l p^m) A^(j p^m).

    The second exponent l = -i - j(2 - d) is forced: it is the unique choice
    making both conjugation relations survive, so the family is parametrized
    by (i, j) mod p^m alone.
    """
    _require_kind(group, "J", "upsilon_family")
    g = group
    pm = g.pm
    d = correction_term(g)
    l = -i - j * (2 - d)
    imgA = g.multiply(g.power(g.A, 1 + i * pm), g.power(g.B, j * pm))
    imgB = g.multiply(g.power(g.B, 1 + l * pm), g.power(g.A, j * pm))
    return hom_from_images(g, imgA, imgB)


def delta_aut(group: Group) -> Morphism:
    """The distinguished 3-central automorphism of J: the (0, 1) family member."""
    return upsilon_family(group, 0, 1)
