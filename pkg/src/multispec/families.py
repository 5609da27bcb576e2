"""Extremal multigraph constructions, their closed-form spectra, and a seeded
configuration-model sampler.

Vertex numbering (fixed so fixtures are reproducible):

* ``B1``: 0, 1 are the degree-d vertices, 2 the degree-d/2 vertex.
* ``H1``: 0, 1 first copy; 2 the glued cut vertex; 3, 4 second copy.
* ``C``:  0..t-1.
* ``H``:  0 = x, 1 = y, 2..t+1 the copy of C.
* ``F``:  0..3 around the 4-cycle; the pairs at vertex 1 carry (d-1)/2,
  the pairs at vertex 3 carry (d+1)/2.
* ``G4``: 0..3 the K_4 core with heavy pairs (0,1), (2,3); 4 = x, 5 = y.

"Duplicating an edge k times" means the pair ends with multiplicity k.
"""

from __future__ import annotations

from collections import Counter

from multispec.multigraph import Multigraph, complete_graph

MASK64 = (1 << 64) - 1
RESAMPLE_LIMIT = 100_000


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def build_B1(d: int) -> Multigraph:
    """The unique 3-vertex multigraph with degrees (d, d, d/2)."""
    _require(d >= 4 and d % 4 == 0, f"B1 needs d >= 4 divisible by 4, got d={d}")
    return Multigraph(3, {(0, 1): 3 * d // 4, (1, 2): d // 4, (0, 2): d // 4})


def build_H1(d: int) -> Multigraph:
    """Two copies of B1 glued at their degree-d/2 vertex."""
    _require(d >= 4 and d % 4 == 0, f"H1 needs d >= 4 divisible by 4, got d={d}")
    a, b = 3 * d // 4, d // 4
    return Multigraph(5, {(0, 1): a, (0, 2): b, (1, 2): b, (3, 4): a, (2, 3): b, (2, 4): b})


def _check_ct(d: int, t: int) -> None:
    _require(t >= 2, f"t must be at least 2, got t={t}")
    _require(d >= 3, f"d must be at least 3, got d={d}")
    _require(d % (t * (t - 1)) == 0, f"d={d} is not a multiple of t(t-1)={t * (t - 1)}")


def build_C(d: int, t: int) -> Multigraph:
    """K_t with every pair at multiplicity (t-2)d / (t(t-1))."""
    _check_ct(d, t)
    return complete_graph(t, (t - 2) * d // (t * (t - 1)))


def build_H(d: int, t: int) -> Multigraph:
    """x and y each joined to every vertex of C_{d,t} by d/t edges."""
    _check_ct(d, t)
    core = build_C(d, t)
    mult = {(u + 2, v + 2): m for (u, v), m in core.mult.items()}
    for c in range(2, t + 2):
        mult[(0, c)] = d // t
        mult[(1, c)] = d // t
    return Multigraph(t + 2, mult)


def expected_spectrum_H(d: int, t: int) -> list[tuple[float, int]]:
    """(eigenvalue, multiplicity) pairs of H_{d,t}, before merging equal values.

    Equitable-quotient roots d and -2d/t, the 0 from the vector that is +1 on x
    and -1 on y, and -(t-2)d/(t(t-1)) from vectors summing to zero on C.
    """
    _check_ct(d, t)
    return [
        (float(d), 1),
        (-2 * d / t, 1),
        (0.0, 1),
        (-(t - 2) * d / (t * (t - 1)), t - 1),
    ]


def expected_spectrum_H1(d: int) -> list[tuple[float, int]]:
    _require(d >= 4 and d % 4 == 0, f"H1 needs d >= 4 divisible by 4, got d={d}")
    return [(float(d), 1), (3 * d / 4, 1), (-d / 4, 1), (-3 * d / 4, 2)]


def build_F(d: int) -> Multigraph:
    """4-cycle whose two edges at vertex 1 carry (d-1)/2 and two at vertex 3 carry (d+1)/2."""
    _require(d >= 3 and d % 2 == 1, f"F needs odd d >= 3, got d={d}")
    lo, hi = (d - 1) // 2, (d + 1) // 2
    return Multigraph(4, {(0, 1): lo, (1, 2): lo, (2, 3): hi, (0, 3): hi})


def expected_mu2_F(d: int) -> float:
    return 1.5 * d - (d * d + 8) ** 0.5 / 2


def build_G4(d: int) -> Multigraph:
    """K_4 with two disjoint pairs at d/2 - 2, plus x, y joined to the core by d/4."""
    _require(d >= 8 and d % 4 == 0, f"G4 needs d >= 8 divisible by 4, got d={d}")
    heavy = d // 2 - 2
    mult = {(0, 1): heavy, (2, 3): heavy, (0, 2): 1, (0, 3): 1, (1, 2): 1, (1, 3): 1}
    for c in range(4):
        mult[(c, 4)] = d // 4
        mult[(c, 5)] = d // 4
    return Multigraph(6, mult)


def expected_spectrum_G4(d: int) -> list[tuple[float, int]]:
    _require(d >= 8 and d % 4 == 0, f"G4 needs d >= 8 divisible by 4, got d={d}")
    return [(float(d), 1), (d / 2 - 4, 1), (0.0, 1), (2 - d / 2, 2), (-d / 2, 1)]


def expand(entries: list[tuple[float, int]]) -> list[float]:
    """Flatten (value, multiplicity) pairs into a non-increasing list."""
    return sorted((v for v, k in entries for _ in range(k)), reverse=True)


def cone(G1: Multigraph, m: int) -> Multigraph:
    """Add an apex (index n) joined to every vertex of G1 by m edges."""
    _require(m >= 1, f"cone multiplicity must be positive, got m={m}")
    mult = dict(G1.mult)
    for v in range(G1.n):
        mult[(v, G1.n)] = m
    return Multigraph(G1.n + 1, mult)


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15, then a two-multiply finalizer."""

    GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = seed & MASK64

    @staticmethod
    def mix(z: int) -> int:
        z &= MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next(self) -> int:
        self.state = (self.state + self.GAMMA) & MASK64
        return self.mix(self.state)

    def below(self, k: int) -> int:
        """Uniform integer in [0, k) by rejection (no modulo bias)."""
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next()
            if x < limit:
                return x % k

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next() >> 11) * 2.0**-53

    def shuffle(self, xs: list) -> None:
        """Fisher-Yates, swapping position i with a uniform j in [0, i]."""
        for i in range(len(xs) - 1, 0, -1):
            j = self.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


def derive_seed(seed: int, index: int) -> int:
    """Per-trial seed: the splitmix64 finalizer applied to seed XOR index."""
    return SplitMix64.mix((seed ^ index) & MASK64)


def random_regular_multigraph(n: int, d: int, seed: int) -> Multigraph:
    """Configuration model conditioned on no loops.

    ``n*d`` stubs are shuffled and paired consecutively; if any pair is a
    loop the whole pairing is redrawn, up to ``RESAMPLE_LIMIT`` times.
    """
    _require(n >= 2, f"need n >= 2, got n={n}")
    _require(d >= 0, f"need d >= 0, got d={d}")
    _require(n * d % 2 == 0, f"n*d must be even, got n={n}, d={d}")
    rng = SplitMix64(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(RESAMPLE_LIMIT):
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        if all(u != v for u, v in pairs):
            return Multigraph(n, Counter((min(u, v), max(u, v)) for u, v in pairs))
    raise RuntimeError(f"no loopless pairing after {RESAMPLE_LIMIT} draws (n={n}, d={d})")


def random_multigraph(n: int, max_mult: int, seed: int, density: float = 0.5) -> Multigraph:
    """Each pair present with probability ``density``, multiplicity uniform in 1..max_mult."""
    _require(n >= 1 and max_mult >= 1, "need n >= 1 and max_mult >= 1")
    rng = SplitMix64(seed)
    mult = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                mult[(u, v)] = rng.randint(1, max_mult)
    return Multigraph(n, mult)
