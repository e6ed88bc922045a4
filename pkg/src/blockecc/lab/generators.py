"""Seeded graph generators and corpora.

Randomness: every corpus derives one 64-bit seed per trial from the master
seed with SplitMix64 (state += 0x9E3779B97F4A7C15, then the usual
xor-shift-multiply finaliser). A graph is drawn from ``random.Random(seed)``
(Mersenne Twister, stable across platforms and Python versions for the
integer APIs used here: ``randrange``, ``randint``, ``choice``, ``shuffle``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Union

from ..graph import Graph
from .fixtures import FIXTURES, fixture

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

ParamValue = Union[int, str, tuple[int, ...]]

MODELS = (
    "path", "cycle", "tree", "connected-gnm", "cactus", "spider",
    "cycle-with-paths", "pyramid-wedge", "fixture",
)


def splitmix64(state: int) -> tuple[int, int]:
    """One SplitMix64 step: returns ``(next_state, output)``."""
    state = (state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def seed_stream(master: int) -> Iterator[int]:
    state = master & MASK64
    while True:
        state, out = splitmix64(state)
        yield out


@dataclass(frozen=True, order=True)
class GenSpec:
    model: str
    params: tuple[tuple[str, ParamValue], ...] = ()
    seed: int = 0

    @classmethod
    def of(cls, model: str, seed: int = 0, **params: ParamValue) -> GenSpec:
        return cls(model, tuple(sorted(params.items())), seed)

    def get(self, name: str, default: ParamValue | None = None) -> ParamValue | None:
        return dict(self.params).get(name, default)

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "params": {k: list(v) if isinstance(v, tuple) else v for k, v in self.params},
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: dict) -> GenSpec:
        params = {
            k: tuple(v) if isinstance(v, list) else v for k, v in data.get("params", {}).items()
        }
        return cls.of(data["model"], int(data.get("seed", 0)), **params)

    def __str__(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.model}({args})#{self.seed}"


def _need(spec: GenSpec, name: str, low: int) -> int:
    value = spec.get(name)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{spec.model}: integer parameter {name!r} is required")
    if value < low:
        raise ValueError(f"{spec.model}: {name} must be >= {low}, got {value}")
    return value


def _path_edges(vs: list[int]) -> list[tuple[int, int]]:
    return list(zip(vs, vs[1:]))


def _cycle_edges(vs: list[int]) -> list[tuple[int, int]]:
    return _path_edges(vs) + [(vs[-1], vs[0])]


def random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform labelled tree on ``n`` vertices via a random Prüfer sequence."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return edges


def _cactus_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    edges: list[tuple[int, int]] = []
    count = 1
    while count < n:
        at = rng.randrange(count)
        room = n - count
        if room >= 2 and rng.random() < 0.5:
            length = rng.randint(3, min(6, room + 1))
            ring = [at] + list(range(count, count + length - 1))
            edges.extend(_cycle_edges(ring))
            count += length - 1
        else:
            edges.append((at, count))
            count += 1
    return edges


def generate(spec: GenSpec) -> Graph:
    rng = random.Random(spec.seed)
    model = spec.model
    if model == "path":
        n = _need(spec, "n", 1)
        return Graph.from_edges(n, _path_edges(list(range(n))))
    if model == "cycle":
        n = _need(spec, "n", 3)
        return Graph.from_edges(n, _cycle_edges(list(range(n))))
    if model == "tree":
        n = _need(spec, "n", 1)
        return Graph.from_edges(n, random_tree_edges(n, rng))
    if model == "connected-gnm":
        n = _need(spec, "n", 1)
        m = _need(spec, "m", max(n - 1, 0))
        if m > n * (n - 1) // 2:
            raise ValueError(f"connected-gnm: m={m} exceeds the {n * (n - 1) // 2} possible edges")
        edges = {tuple(sorted(e)) for e in random_tree_edges(n, rng)}
        while len(edges) < m:
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                edges.add((min(u, v), max(u, v)))
        return Graph.from_edges(n, sorted(edges))
    if model == "cactus":
        n = _need(spec, "n", 1)
        return Graph.from_edges(n, _cactus_edges(n, rng))
    if model == "spider":
        legs = spec.get("legs")
        if not isinstance(legs, tuple) or any(not isinstance(x, int) or x < 1 for x in legs):
            raise ValueError("spider: 'legs' must be a tuple of positive leg lengths")
        edges = []
        count = 1
        for length in legs:
            edges.extend(_path_edges([0] + list(range(count, count + length))))
            count += length
        return Graph.from_edges(count, edges)
    if model == "cycle-with-paths":
        half = _need(spec, "n", 1)
        length = _need(spec, "l", 0)
        # a 2-cycle is not simple; n=1 collapses it to a single edge
        c = 2 * half
        edges = [(0, 1)] if half == 1 else _cycle_edges(list(range(c)))
        count = c
        for i in range(c):
            edges.extend(_path_edges([i] + list(range(count, count + length))))
            count += length
        return Graph.from_edges(count, edges)
    if model == "pyramid-wedge":
        k = _need(spec, "k", 1)
        base = _need(spec, "base", 3)
        edges = []
        count = 1
        for _ in range(k):
            ring = list(range(count, count + base))
            edges.extend(_cycle_edges(ring))
            edges.extend((0, v) for v in ring)
            count += base
        return Graph.from_edges(count, edges)
    if model == "fixture":
        name = spec.get("name")
        if name not in FIXTURES:
            raise ValueError(f"fixture: unknown name {name!r}")
        return fixture(name)
    raise ValueError(f"unknown model {model!r}")


def grid_specs(max_n: int = 60, halves=range(1, 7), lengths=range(0, 6)) -> list[GenSpec]:
    """The cycle-with-paths grid, restricted to graphs with at most ``max_n`` vertices."""
    out = []
    for h in halves:
        for l in lengths:
            if 2 * h * (l + 1) <= max_n:
                out.append(GenSpec.of("cycle-with-paths", n=h, l=l))
    return out


def fixture_specs() -> list[GenSpec]:
    return [GenSpec.of("fixture", name=name) for name in FIXTURES]


def _draw(kind: str, seed: int, max_n: int) -> GenSpec:
    rng = random.Random(seed)
    if kind == "cactus":
        return GenSpec.of("cactus", seed, n=rng.randint(1, max_n))
    if kind == "tree":
        return GenSpec.of("tree", seed, n=rng.randint(1, max_n))
    if kind == "gnm":
        n = rng.randint(2, max_n)
        extra = rng.randint(0, min(n, n * (n - 1) // 2 - (n - 1)))
        return GenSpec.of("connected-gnm", seed, n=n, m=n - 1 + extra)
    if kind == "dense":
        n = rng.randint(2, max_n)
        top = n * (n - 1) // 2
        return GenSpec.of("connected-gnm", seed, n=n, m=rng.randint(n - 1, top))
    if kind == "path":
        return GenSpec.of("path", seed, n=rng.randint(1, max_n))
    raise ValueError(kind)


# default mix per block of ten trials: 4 cacti, 2 trees, 2 gnm, 1 grid, 1 fixture
_DEFAULT_SLOTS = ("cactus",) * 4 + ("tree",) * 2 + ("gnm",) * 2 + ("grid", "fixture")
_FUZZ_SLOTS = ("gnm",) * 4 + ("dense",) * 2 + ("tree", "cactus", "path", "gnm")


def default_corpus(trials: int, seed: int = 42, max_n: int = 60) -> list[GenSpec]:
    grid, fixtures = grid_specs(max_n), [s for s in fixture_specs() if generate(s).n <= max_n]
    out = []
    seeds = seed_stream(seed)
    for i in range(trials):
        s = next(seeds)
        kind = _DEFAULT_SLOTS[i % 10]
        if kind == "grid":
            out.append(grid[(i // 10) % len(grid)])
        elif kind == "fixture":
            out.append(fixtures[(i // 10) % len(fixtures)])
        else:
            out.append(_draw(kind, s, max_n))
    return out


def cactus_corpus(trials: int, seed: int = 42, max_n: int = 60) -> list[GenSpec]:
    seeds = seed_stream(seed)
    return [_draw("cactus", next(seeds), max_n) for _ in range(trials)]


def fuzz_corpus(trials: int, seed: int = 7, max_n: int = 60) -> list[GenSpec]:
    seeds = seed_stream(seed)
    return [_draw(_FUZZ_SLOTS[i % 10], next(seeds), max_n) for i in range(trials)]
