"""Small finite groups given by multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

__all__ = ["FiniteGroup", "cyclic", "symmetric", "parse_group"]


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    labels: tuple
    table: tuple  # table[a][b] = index of a*b
    identity: int = 0

    def __post_init__(self):
        n = len(self.labels)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError(f"group table of {self.name} is not {n}x{n}")
        for a, b, c in product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValueError(f"group table of {self.name} is not associative")
        e = self.identity
        if any(self.table[e][a] != a or self.table[a][e] != a for a in range(n)):
            raise ValueError(f"{self.labels[e]} is not an identity of {self.name}")
        if any(e not in row for row in self.table):
            raise ValueError(f"group table of {self.name} has elements without inverses")

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def conj(self, g: int, x: int) -> int:
        """``g x g⁻¹``."""
        return self.mul(self.mul(g, x), self.inv(g))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not an element of {self.name}") from None

    def is_conjugation_closed(self, subset) -> bool:
        s = set(subset)
        return all(self.conj(g, x) in s for g in range(self.order) for x in s)

    def is_abelian(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a) for a in range(self.order) for b in range(self.order))


def cyclic(n: int) -> FiniteGroup:
    labels = tuple(str(i) for i in range(n))
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(f"Z{n}", labels, table)


def _cycle_label(perm: tuple) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        cycles.append("(" + "".join(cyc) + ")")
    return "".join(cycles) or "e"


def symmetric(n: int) -> FiniteGroup:
    """``S_n``; elements act on ``{1..n}`` and ``(στ)(x) = σ(τ(x))``."""
    perms = sorted(permutations(range(n)), key=lambda p: (sum(p[i] != i for i in range(n)), _cycle_label(p)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(s[t[x]] for x in range(n))] for t in perms) for s in perms
    )
    return FiniteGroup(f"S{n}", tuple(_cycle_label(p) for p in perms), table)


def parse_group(name: str) -> FiniteGroup:
    name = name.strip()
    if name[:1] in ("Z", "C") and name[1:].isdigit() and int(name[1:]) >= 1:
        return cyclic(int(name[1:]))
    if name[:1] == "S" and name[1:].isdigit() and 1 <= int(name[1:]) <= 4:
        return symmetric(int(name[1:]))
    raise KeyError(f"unknown group {name!r}; use Zn or Sn (n ≤ 4)")
