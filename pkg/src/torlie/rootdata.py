"""Cartan data for the supported simply laced algebras and their foldings.

Supported inputs are A_{2n-1} (twist order 1 or 2), D_{n+1} (twist order
1 or 2) and D_4 with the order-3 triality twist.  This module owns the
finite Cartan matrix, the diagram automorphism as an index permutation,
root-system enumeration, the highest root, the folded Cartan matrix of
the fixed-point subalgebra, its d-vector, and the extended matrix that
adjoins the affine node 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Root = tuple  # integer coordinate vector over the simple roots


class ConfigError(ValueError):
    """Unsupported (family, n, r) combination or malformed input."""


@dataclass(frozen=True)
class AlgebraSpec:
    """A supported simple Lie algebra together with a twist order.

    `family` is "A" or "D"; `n` is the rank parameter (A_{2n-1} or
    D_{n+1}); `r` is the twist order.  The triality case is D_4 with
    r = 3: it may be entered as n=3 (the D_{n+1} parameter) or n=4
    (the subscript of D_4), both normalize to n=3.
    """

    family: str
    n: int
    r: int

    def __post_init__(self):
        if self.family not in ("A", "D"):
            raise ConfigError(f"unknown family {self.family!r} (expected A or D)")
        if self.r not in (1, 2, 3):
            raise ConfigError(f"unsupported twist order r={self.r}")
        if self.family == "A":
            if self.r == 3:
                raise ConfigError("r=3 is only valid for D_4")
            if self.n < 2:
                raise ConfigError("A_{2n-1} needs n >= 2")
        else:
            if self.r == 3:
                if self.n not in (3, 4):
                    raise ConfigError("r=3 is only valid for D_4 (n=3 or n=4)")
                object.__setattr__(self, "n", 3)
            elif self.n < 2:
                raise ConfigError("D_{n+1} needs n >= 2")

    @property
    def N(self) -> int:
        """Rank of the finite algebra."""
        return 2 * self.n - 1 if self.family == "A" else self.n + 1

    @property
    def pres_rank(self) -> int:
        """Number of non-affine generator indices I = {1..pres_rank}."""
        if self.r == 1:
            return self.N
        if self.r == 3:
            return 2
        return self.n

    @property
    def name(self) -> str:
        return f"{self.family}{self.N}"

    @property
    def folded_name(self) -> str:
        if self.r == 1:
            return self.name
        if self.family == "A":
            return f"C{self.n}"
        if self.r == 3:
            return "G2"
        return f"B{self.n}"


@dataclass(frozen=True)
class CartanData:
    """All index-level data attached to a spec.

    Matrices are tuples of tuples of ints.  `sigma` is the diagram
    automorphism as a 1-based permutation tuple (entry 0 unused).
    `A_folded` and `d` are indexed by I = {1..pres_rank}; `A_ext`
    adjoins index 0.  `theta` is the highest root.
    """

    A_prime: tuple
    sigma: tuple
    A_folded: tuple
    A_ext: tuple
    d: tuple
    theta: Root


def _edges(spec: AlgebraSpec):
    N, n = spec.N, spec.n
    if spec.family == "A":
        return [(i, i + 1) for i in range(1, N)]
    if spec.r == 3:
        return [(1, 2), (2, 3), (2, 4)]
    # D_{n+1}: chain 1..n-1, with node n-1 forking to n and n+1
    chain = [(i, i + 1) for i in range(1, n - 1)]
    return chain + [(n - 1, n), (n - 1, n + 1)] if n >= 2 else chain


def _sigma_perm(spec: AlgebraSpec) -> tuple:
    N, n = spec.N, spec.n
    perm = list(range(N + 1))
    if spec.r == 1:
        return tuple(perm)
    if spec.family == "A":
        for i in range(1, N + 1):
            perm[i] = N - i + 1
    elif spec.r == 3:
        perm[1], perm[2], perm[3], perm[4] = 3, 2, 4, 1
    else:
        perm[n], perm[n + 1] = n + 1, n
    return tuple(perm)


def orbit(spec: AlgebraSpec, node: int) -> tuple:
    """The distinct sigma-orbit of a node, starting at the node itself."""
    perm = build_cartan(spec).sigma
    out = [node]
    j = perm[node]
    while j != node:
        out.append(j)
        j = perm[j]
    return tuple(out)


def _theta_coords(spec: AlgebraSpec) -> Root:
    N, n = spec.N, spec.n
    if spec.family == "A":
        return tuple([1] * N)
    if spec.r == 3:
        return (1, 2, 1, 1)
    return tuple([1] + [2] * (n - 2) + [1, 1])


def _folded_matrix(spec: AlgebraSpec, A_prime) -> tuple:
    if spec.r == 1:
        return A_prime
    nn = spec.pres_rank
    A = [[0] * nn for _ in range(nn)]
    for i in range(nn):
        A[i][i] = 2
    for i in range(nn - 1):
        A[i][i + 1] = A[i + 1][i] = -1
    if spec.family == "A":  # C_n
        A[nn - 2][nn - 1] = -2
    elif spec.r == 3:  # G_2
        A[0][1] = -3
    else:  # B_n
        A[nn - 1][nn - 2] = -2
    return tuple(tuple(row) for row in A)


def _extended_matrix(spec: AlgebraSpec, A_folded, theta, A_prime) -> tuple:
    nn = spec.pres_rank
    ext = [[0] * (nn + 1) for _ in range(nn + 1)]
    ext[0][0] = 2
    for i in range(nn):
        for j in range(nn):
            ext[i + 1][j + 1] = A_folded[i][j]
    if spec.r == 1:
        # affine node pairing computed from the highest root
        for j in range(1, nn + 1):
            v = -sum(theta[i] * A_prime[i][j - 1] for i in range(spec.N))
            ext[0][j] = ext[j][0] = v
    else:
        attach = 1 if spec.family == "A" else 2
        ext[0][attach] = ext[attach][0] = -1
    return tuple(tuple(row) for row in ext)


@lru_cache(maxsize=None)
def build_cartan(spec: AlgebraSpec) -> CartanData:
    N = spec.N
    A = [[0] * N for _ in range(N)]
    for i in range(N):
        A[i][i] = 2
    for i, j in _edges(spec):
        A[i - 1][j - 1] = A[j - 1][i - 1] = -1
    A_prime = tuple(tuple(row) for row in A)
    sigma = _sigma_perm(spec)

    if spec.r == 1:
        d = tuple([Fraction(1)] * N)
    elif spec.family == "A":
        d = tuple([Fraction(1, 2)] * (spec.n - 1) + [Fraction(1)])
    elif spec.r == 3:
        d = (Fraction(1, 3), Fraction(1))
    else:
        d = tuple([Fraction(1)] * (spec.n - 1) + [Fraction(1, 2)])

    theta = _theta_coords(spec)
    A_folded = _folded_matrix(spec, A_prime)
    A_ext = _extended_matrix(spec, A_folded, theta, A_prime)
    return CartanData(A_prime, sigma, A_folded, A_ext, d, theta)


def root_form(a, b, spec: AlgebraSpec) -> Fraction:
    """Invariant bilinear form of two coordinate vectors, (alpha|alpha)=2."""
    A = build_cartan(spec).A_prime
    N = spec.N
    total = Fraction(0)
    for i in range(N):
        if not a[i]:
            continue
        total += a[i] * sum(A[i][j] * b[j] for j in range(N) if b[j])
    return total


@lru_cache(maxsize=None)
def enumerate_roots(spec: AlgebraSpec) -> tuple:
    """The full root set, closed under negation, every root of norm 2.

    Positive roots are grown by simple-root ladders: gamma + alpha_i is
    a root exactly when (gamma|alpha_i) = -1 in the simply laced case.
    """
    N = spec.N
    A = build_cartan(spec).A_prime
    simple = [tuple(1 if t == i else 0 for t in range(N)) for i in range(N)]
    pos = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for g in frontier:
            for i in range(N):
                ip = sum(A[i][j] * g[j] for j in range(N) if g[j])
                if ip == -1:
                    cand = tuple(g[j] + (1 if j == i else 0) for j in range(N))
                    if cand not in pos:
                        pos.add(cand)
                        new.append(cand)
        frontier = new
    allroots = set(pos)
    allroots.update(tuple(-c for c in g) for g in pos)
    return tuple(sorted(allroots))


def highest_root(spec: AlgebraSpec) -> Root:
    return build_cartan(spec).theta


def sigma_root(a: Root, spec: AlgebraSpec) -> Root:
    """Push a coordinate vector through the diagram automorphism."""
    perm = build_cartan(spec).sigma
    out = [0] * spec.N
    for i in range(spec.N):
        out[perm[i + 1] - 1] = a[i]
    return tuple(out)


def folded_simple_roots(spec: AlgebraSpec) -> list:
    """alpha_i = (1/r) sum over the sigma-images of the orbit representative."""
    N, r = spec.N, spec.r
    perm = build_cartan(spec).sigma
    out = []
    for i in range(1, spec.pres_rank + 1):
        coords = [Fraction(0)] * N
        node = i
        for _ in range(r):
            coords[node - 1] += Fraction(1, r)
            node = perm[node]
        out.append(tuple(coords))
    return out
