"""Independent oracle: coset enumeration straight from the presentations.

Builds the right regular permutation representation of J, H or K by
Todd-Coxeter over the trivial subgroup, using nothing from the package's
collection engine.  Tests map engine normal forms onto permutation words and
compare multiplications, which certifies the engine against the presentation
itself.
"""

from __future__ import annotations

SENTINEL = -1

# generator alphabet: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1
_INV = {0: 1, 1: 0, 2: 3, 3: 2}


def _inv_word(word):
    return [_INV[g] for g in reversed(word)]


class _CosetGraph:
    """Schreier graph on cosets of the trivial subgroup (union-find flavor)."""

    def __init__(self, ngens, relators):
        self.ngens = ngens
        self.relators = relators
        self.labels = []
        self.neighbors = []
        self.start = self.add_vertex()

    def add_vertex(self):
        c = len(self.labels)
        self.labels.append(c)
        self.neighbors.append(self.ngens * [SENTINEL])
        return c

    def find(self, c):
        labels = self.labels
        root = c
        while labels[root] != root:
            root = labels[root]
        while labels[c] != root:
            labels[c], c = root, labels[c]
        return root

    def unify(self, c1, c2):
        queue = [(c1, c2)]
        while queue:
            c1, c2 = queue.pop()
            c1, c2 = self.find(c1), self.find(c2)
            if c1 == c2:
                continue
            if c1 > c2:
                c1, c2 = c2, c1
            self.labels[c2] = c1
            row1, row2 = self.neighbors[c1], self.neighbors[c2]
            for d in range(self.ngens):
                if row1[d] == SENTINEL:
                    row1[d] = row2[d]
                elif row2[d] != SENTINEL:
                    queue.append((row1[d], row2[d]))

    def follow(self, c, d):
        c = self.find(c)
        row = self.neighbors[c]
        if row[d] == SENTINEL:
            new = self.add_vertex()
            row[d] = new
            self.neighbors[new][_INV[d]] = c
        return self.find(row[d])

    def follow_word(self, c, word):
        for d in word:
            c = self.follow(c, d)
        return c

    def build(self, max_cosets=2_000_000):
        to_visit = 0
        while to_visit < len(self.labels):
            if len(self.labels) > max_cosets:
                raise RuntimeError("coset enumeration exceeded its budget")
            c = self.find(to_visit)
            if c == to_visit:
                for rel in self.relators:
                    self.unify(self.follow_word(c, rel), c)
            to_visit += 1

    def permutations(self):
        """Live-coset action of a and b as permutation lists."""
        live = [c for c in range(len(self.labels)) if self.find(c) == c]
        renum = {c: n for n, c in enumerate(live)}
        perms = []
        for d in (0, 2):  # a, b
            perm = [renum[self.follow(c, d)] for c in live]
            perms.append(perm)
        return perms


def _relators(p, m, alpha, kind):
    a, A, b, B = 0, 1, 2, 3
    c_word = [A, B, a, b]          # [a, b]
    c_inv = _inv_word(c_word)
    rels = []
    # a^[a,b] = a^alpha  ->  c^-1 a c a^-alpha
    rels.append(c_inv + [a] + c_word + [A] * alpha)
    # b^[b,a] = b^alpha, with [b,a] = c^-1  ->  c b c^-1 b^-alpha
    rels.append(c_word + [b] + c_inv + [B] * alpha)
    e = 3 * m if kind == "J" else 2 * m
    rels.append([a] * p**e)
    rels.append([b] * p**e)
    if kind == "K":
        rels.append(c_word * p**m)
    return rels


def regular_representation(p, m, alpha, kind, max_cosets=2_000_000):
    """Right regular representation: permutations of a and b on |G| points.

    Point 0 is the coset of the identity; right multiplication by a word w
    sends point x to the endpoint of w traced from x.
    """
    graph = _CosetGraph(4, _relators(p, m, alpha, kind))
    graph.build(max_cosets)
    pa, pb = graph.permutations()
    return pa, pb


def apply_word(perms, point, word):
    """Trace (gen, exponent) pairs from a point; negative exponents allowed."""
    pa, pb, pa_inv, pb_inv = perms
    table = {(0, False): pa, (0, True): pa_inv, (1, False): pb, (1, True): pb_inv}
    for gen, exp in word:
        perm = table[(gen, exp < 0)]
        for _ in range(abs(exp)):
            point = perm[point]
    return point


def invert_perm(perm):
    out = [0] * len(perm)
    for i, v in enumerate(perm):
        out[v] = i
    return out
