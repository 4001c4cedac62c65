"""Finite groups as explicit multiplication tables.

Elements are the dense integers 0..order-1 with 0 the identity, so every
derived object (class partitions, subgroups, quotients) has a canonical,
reproducible form.  All types are immutable after construction and all
operations are pure.
"""

from __future__ import annotations

import re
from math import lcm

from .errors import GroupConstructionError

_FULL_ASSOCIATIVITY_BOUND = 512


class GroupTable:
    """A finite group given by its full multiplication table.

    The table is validated at construction: Latin square, two-sided
    identity at 0, two-sided inverses, and associativity (exhaustively up
    to order 512, sampled above that).
    """

    __slots__ = ("order", "mul", "inv", "label", "_memo")

    def __init__(self, mul, label: str = "G", check_associativity: bool | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in mul)
        n = len(rows)
        if n == 0:
            raise GroupConstructionError("empty multiplication table")
        full = frozenset(range(n))
        for g, row in enumerate(rows):
            if len(row) != n:
                raise GroupConstructionError(f"row {g} has length {len(row)}, expected {n}")
            if frozenset(row) != full:
                raise GroupConstructionError(f"row {g} is not a permutation of 0..{n - 1}")
        for c in range(n):
            if frozenset(rows[g][c] for g in range(n)) != full:
                raise GroupConstructionError(f"column {c} is not a permutation of 0..{n - 1}")
        for g in range(n):
            if rows[0][g] != g or rows[g][0] != g:
                raise GroupConstructionError("element 0 is not a two-sided identity")
        inv = [-1] * n
        for g in range(n):
            h = rows[g].index(0)
            if rows[h][g] != 0:
                raise GroupConstructionError(f"element {g} has no two-sided inverse")
            inv[g] = h
        if check_associativity is None:
            check_associativity = n <= _FULL_ASSOCIATIVITY_BOUND
        if check_associativity:
            for a in range(n):
                ra = rows[a]
                for b in range(n):
                    ab = ra[b]
                    rb = rows[b]
                    rab = rows[ab]
                    for c in range(n):
                        if rab[c] != ra[rb[c]]:
                            raise GroupConstructionError(
                                f"associativity fails at ({a},{b},{c})"
                            )
        else:
            # spot checks on a fixed deterministic sample
            step = max(1, n // 7)
            sample = range(0, n, step)
            for a in sample:
                for b in sample:
                    for c in sample:
                        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                            raise GroupConstructionError(
                                f"associativity fails at ({a},{b},{c})"
                            )
        self.order = n
        self.mul = rows
        self.inv = tuple(inv)
        self.label = label
        self._memo = {}

    # basic operations

    def multiply(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conjugate(self, g: int, h: int) -> int:
        """h g h^-1."""
        return self.mul[self.mul[h][g]][self.inv[h]]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul[x][g]
            k += 1
        return k

    def exponent(self) -> int:
        """lcm of the element orders."""
        if "exponent" not in self._memo:
            self._memo["exponent"] = lcm(*(self.element_order(g) for g in range(self.order)))
        return self._memo["exponent"]

    def elements(self) -> range:
        return range(self.order)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupTable({self.label}, order={self.order})"


class SubgroupSet:
    """A subgroup of a GroupTable, stored as its member set.

    Construction verifies that the set actually is a subgroup (contains the
    identity and is closed under multiplication; inverses follow by
    finiteness).
    """

    __slots__ = ("parent", "members")

    def __init__(self, parent: GroupTable, members):
        mem = frozenset(int(x) for x in members)
        if 0 not in mem:
            raise GroupConstructionError("subgroup must contain the identity")
        for a in mem:
            row = parent.mul[a]
            for b in mem:
                if row[b] not in mem:
                    raise GroupConstructionError(
                        f"set is not closed under multiplication: {a}*{b} escapes"
                    )
        self.parent = parent
        self.members = mem

    def __contains__(self, g: int) -> bool:
        return g in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubgroupSet)
            and other.parent is self.parent
            and other.members == self.members
        )

    def __le__(self, other: "SubgroupSet") -> bool:
        self._same_parent(other)
        return self.members <= other.members

    def __lt__(self, other: "SubgroupSet") -> bool:
        self._same_parent(other)
        return self.members < other.members

    def _same_parent(self, other):
        if other.parent is not self.parent:
            raise GroupConstructionError("subgroups of different groups are not comparable")

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conjugate(g, h) in self.members for g in self.members for h in range(G.order))

    def __repr__(self) -> str:
        return f"SubgroupSet({self.parent.label}, {sorted(self.members)})"


def trivial_subgroup(G: GroupTable) -> SubgroupSet:
    return SubgroupSet(G, (0,))


def full_subgroup(G: GroupTable) -> SubgroupSet:
    return SubgroupSet(G, range(G.order))


class ElementPartition:
    """A partition of 0..n-1 into nonempty blocks, in canonical order.

    The block containing 0 comes first; the rest are ordered by their
    smallest member.
    """

    __slots__ = ("n", "blocks", "block_of")

    def __init__(self, n: int, blocks):
        blks = [frozenset(int(x) for x in b) for b in blocks]
        if any(not b for b in blks):
            raise GroupConstructionError("partition blocks must be nonempty")
        cover = [-1] * n
        for idx, b in enumerate(blks):
            for x in b:
                if x < 0 or x >= n:
                    raise GroupConstructionError(f"element {x} outside 0..{n - 1}")
                if cover[x] != -1:
                    raise GroupConstructionError(f"element {x} appears in two blocks")
                cover[x] = idx
        if -1 in cover:
            raise GroupConstructionError("partition does not cover every element")
        blks.sort(key=lambda b: (0 not in b, min(b)))
        self.n = n
        self.blocks = tuple(blks)
        block_of = [-1] * n
        for idx, b in enumerate(self.blocks):
            for x in b:
                block_of[x] = idx
        self.block_of = tuple(block_of)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ElementPartition)
            and other.n == self.n
            and other.blocks == self.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def block_containing(self, x: int) -> frozenset[int]:
        return self.blocks[self.block_of[x]]

    def to_json(self):
        return [sorted(b) for b in self.blocks]

    def __repr__(self) -> str:
        return f"ElementPartition({[sorted(b) for b in self.blocks]})"


# ---------------------------------------------------------------------------
# derived structure


def conjugacy_classes(G: GroupTable) -> ElementPartition:
    """Orbits of the conjugation action, identity class first."""
    if "classes" in G._memo:
        return G._memo["classes"]
    seen = [False] * G.order
    blocks = []
    for g in range(G.order):
        if seen[g]:
            continue
        orbit = {G.conjugate(g, h) for h in range(G.order)}
        for x in orbit:
            seen[x] = True
        blocks.append(orbit)
    part = ElementPartition(G.order, blocks)
    G._memo["classes"] = part
    return part


def generated_subgroup(G: GroupTable, seed) -> SubgroupSet:
    """Smallest subgroup containing seed; the empty seed gives {1}."""
    members = {0}
    frontier = [0]
    gens = sorted({int(x) for x in seed})
    for g in gens:
        if g not in members:
            members.add(g)
            frontier.append(g)
    while frontier:
        a = frontier.pop()
        row = G.mul[a]
        for b in tuple(members):
            for prod in (row[b], G.mul[b][a]):
                if prod not in members:
                    members.add(prod)
                    frontier.append(prod)
    return SubgroupSet(G, members)


def subgroup_product(G: GroupTable, A: SubgroupSet, B: SubgroupSet) -> SubgroupSet:
    """The product set AB, which must again be a subgroup."""
    prod = {G.mul[a][b] for a in A.members for b in B.members}
    try:
        return SubgroupSet(G, prod)
    except GroupConstructionError as exc:
        raise GroupConstructionError(
            f"product of subgroups is not a subgroup ({len(prod)} elements)"
        ) from exc


def coset_saturation(G: GroupTable, M: SubgroupSet, block) -> frozenset[int]:
    """Union of the cosets gM over g in block; idempotent."""
    out = set()
    for g in block:
        row = G.mul[g]
        out.update(row[m] for m in M.members)
    return frozenset(out)


def quotient_group(G: GroupTable, N: SubgroupSet) -> tuple[GroupTable, tuple[int, ...]]:
    """The quotient G/N with its projection map; N must be normal.

    Cosets are numbered by ascending minimal member, which puts the
    identity coset at 0.  The projection is verified to be a surjective
    homomorphism.
    """
    if N.parent is not G:
        raise GroupConstructionError("subgroup belongs to a different group")
    key = ("quotient", N.members)
    if key in G._memo:
        return G._memo[key]
    if not N.is_normal():
        raise GroupConstructionError("cannot form a quotient by a non-normal subgroup")
    coset_of = [-1] * G.order
    cosets = []
    for g in range(G.order):
        if coset_of[g] != -1:
            continue
        coset = frozenset(G.mul[g][n] for n in N.members)
        idx = len(cosets)
        cosets.append(coset)
        for x in coset:
            coset_of[x] = idx
    order = [i for i, _ in sorted(enumerate(cosets), key=lambda t: min(t[1]))]
    rank = {old: new for new, old in enumerate(order)}
    cosets = [cosets[i] for i in order]
    proj = tuple(rank[coset_of[g]] for g in range(G.order))
    reps = [min(c) for c in cosets]
    table = [[proj[G.mul[a][b]] for b in reps] for a in reps]
    label = f"{G.label}/H{len(N)}"
    Q = GroupTable(table, label=label)
    for a in range(G.order):
        for b in range(G.order):
            if proj[G.mul[a][b]] != Q.mul[proj[a]][proj[b]]:
                raise GroupConstructionError("projection is not a homomorphism")
    result = (Q, proj)
    G._memo[key] = result
    return result


def subgroup_group(G: GroupTable, N: SubgroupSet) -> tuple[GroupTable, tuple[int, ...], dict[int, int]]:
    """N as a group in its own right: (table, local->global, global->local)."""
    if N.parent is not G:
        raise GroupConstructionError("subgroup belongs to a different group")
    key = ("subgroup", N.members)
    if key in G._memo:
        return G._memo[key]
    to_global = tuple(sorted(N.members))
    to_local = {g: i for i, g in enumerate(to_global)}
    table = [[to_local[G.mul[a][b]] for b in to_global] for a in to_global]
    H = GroupTable(table, label=f"{G.label}|H{len(N)}")
    result = (H, to_global, to_local)
    G._memo[key] = result
    return result


def group_center(G: GroupTable) -> SubgroupSet:
    """The classical center {g : gh = hg for all h}."""
    members = [
        g
        for g in range(G.order)
        if all(G.mul[g][h] == G.mul[h][g] for h in range(G.order))
    ]
    return SubgroupSet(G, members)


def derived_subgroup(G: GroupTable) -> SubgroupSet:
    """The classical commutator subgroup."""
    comms = {
        G.mul[G.mul[G.inv[a]][G.inv[b]]][G.mul[a][b]]
        for a in range(G.order)
        for b in range(G.order)
    }
    return generated_subgroup(G, comms)


# ---------------------------------------------------------------------------
# construction: catalog, permutation generators, raw tables

_FACTOR_RE = re.compile(r"^([A-Za-z]+)(\d*)$")


def _cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _dihedral_table(n: int) -> list[list[int]]:
    # element j*n + i encodes r^i s^j with s r s = r^-1
    size = 2 * n

    def mul(a, b):
        i, j = a % n, a // n
        k, l = b % n, b // n
        i2 = (i + k) % n if j == 0 else (i - k) % n
        return ((j + l) % 2) * n + i2

    return [[mul(a, b) for b in range(size)] for a in range(size)]


_Q8_UNIT_MUL = {
    # (u, v) -> (sign flip, unit) for units 0:1, 1:i, 2:j, 3:k
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
    (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
    (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
    (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
}


def _quaternion8_table() -> list[list[int]]:
    # element 2u + s encodes (-1)^s * unit, units ordered 1, i, j, k

    def mul(a, b):
        ua, sa = a // 2, a % 2
        ub, sb = b // 2, b % 2
        flip, u = _Q8_UNIT_MUL[(ua, ub)]
        return 2 * u + (sa + sb + flip) % 2

    return [[mul(a, b) for b in range(8)] for a in range(8)]


def _generalized_quaternion_table(size: int) -> list[list[int]]:
    # <a, b | a^(size/2) = 1, b^2 = a^(size/4), b a b^-1 = a^-1>
    h = size // 2

    def mul(x, y):
        i, j = x % h, x // h
        k, l = y % h, y // h
        i2 = (i + k) % h if j == 0 else (i - k) % h
        jl = j + l
        if jl == 2:
            return (i2 + h // 2) % h
        return jl * h + i2

    return [[mul(a, b) for b in range(size)] for a in range(size)]


def _perm_table(perms: list[tuple[int, ...]], label: str) -> GroupTable:
    elems = sorted(perms)
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[tuple(p[q[x]] for x in range(len(p)))] for q in elems] for p in elems]
    return GroupTable(table, label=label)


def _symmetric_elements(n: int) -> list[tuple[int, ...]]:
    from itertools import permutations

    return [tuple(p) for p in permutations(range(n))]


def _parity(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _product_table(A: GroupTable, B: GroupTable, label: str) -> GroupTable:
    nb = B.order

    def mul(x, y):
        a1, b1 = divmod(x, nb)
        a2, b2 = divmod(y, nb)
        return A.mul[a1][a2] * nb + B.mul[b1][b2]

    size = A.order * B.order
    return GroupTable([[mul(x, y) for y in range(size)] for x in range(size)], label=label)


def _catalog_factor(name: str) -> GroupTable:
    m = _FACTOR_RE.match(name)
    if not m:
        raise GroupConstructionError(f"unrecognized catalog name {name!r}")
    kind, digits = m.group(1), m.group(2)
    n = int(digits) if digits else None
    if kind == "C" and n and n >= 1:
        return GroupTable(_cyclic_table(n), label=name)
    if kind == "D" and n and n >= 1:
        return GroupTable(_dihedral_table(n), label=name)
    if kind == "Q" and n == 8:
        return GroupTable(_quaternion8_table(), label=name)
    if kind == "Q" and n and n >= 8 and n % 4 == 0:
        return GroupTable(_generalized_quaternion_table(n), label=name)
    if kind == "S" and n and 1 <= n <= 4:
        return _perm_table(_symmetric_elements(n), label=name)
    if kind == "A" and n == 4:
        evens = [p for p in _symmetric_elements(4) if _parity(p) == 0]
        return _perm_table(evens, label=name)
    raise GroupConstructionError(f"unrecognized catalog name {name!r}")


def catalog_group(name: str) -> GroupTable:
    """Build a named group: Cn, Dn (order 2n), Q8/Q16, Sn (n<=4), A4, and
    x-separated direct products such as C2xC2.

    Element numbering is fixed and documented so that derived objects are
    reproducible:

    * Cn: k encodes g^k (addition mod n).
    * Dn: j*n + i encodes r^i s^j with s r s = r^-1.
    * Q8: 2u + s encodes (-1)^s times the unit (1, i, j, k)[u], so the
      elements read 1, -1, i, -i, j, -j, k, -k.
    * Q4m (m > 2): j*(2m) + i encodes a^i b^j with a of order 2m,
      b^2 = a^m, and b a b^-1 = a^-1.
    * Sn and A4: permutation tuples sorted lexicographically; the product
      p*q acts as "apply q, then p".
    * AxB: a*|B| + b, factors combined left to right.
    """
    factors = name.split("x")
    tables = [_catalog_factor(f.strip()) for f in factors]
    out = tables[0]
    for t in tables[1:]:
        out = _product_table(out, t, label=name)
    if len(tables) > 1:
        out.label = name
    return out


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycles(line: str) -> tuple[int, ...]:
    cycles = []
    rest = line.strip()
    if not rest:
        raise GroupConstructionError("empty permutation line")
    matched = _CYCLE_RE.findall(rest)
    if not matched or _CYCLE_RE.sub("", rest).strip():
        raise GroupConstructionError(f"malformed cycle notation: {line!r}")
    for body in matched:
        pts = [int(tok) for tok in body.replace(",", " ").split()]
        if any(p < 1 for p in pts):
            raise GroupConstructionError("cycle points must be positive integers")
        if len(set(pts)) != len(pts):
            raise GroupConstructionError(f"repeated point in cycle ({body})")
        cycles.append(pts)
    n = max((max(c) for c in cycles if c), default=0)
    perm = list(range(n))
    for cycle in cycles:
        if len(cycle) < 2:
            continue
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            perm[a - 1] = b - 1
    return tuple(perm)


def permutation_group(lines, label: str = "perm") -> GroupTable:
    """Closure of permutation generators given in cycle notation, one per line."""
    raw = [ln for ln in (str(x).strip() for x in lines) if ln and not ln.startswith("#")]
    if not raw:
        raise GroupConstructionError("no permutation generators given")
    partial = [_parse_cycles(ln) for ln in raw]
    n = max(len(p) for p in partial)
    gens = [tuple(list(p) + list(range(len(p), n))) for p in partial]
    identity = tuple(range(n))
    elems = {identity}
    frontier = [identity]
    while frontier:
        p = frontier.pop()
        for q in gens:
            prod = tuple(p[q[x]] for x in range(n))
            if prod not in elems:
                elems.add(prod)
                frontier.append(prod)
    return _perm_table(sorted(elems), label=label)


def group_from_table_text(text: str, label: str = "file") -> GroupTable:
    """Parse the text format: `order n` then n rows of n integers."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("order"):
        raise GroupConstructionError("group file must start with 'order n'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise GroupConstructionError("malformed 'order n' header") from exc
    if len(lines) != n + 1:
        raise GroupConstructionError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            rows.append([int(tok) for tok in ln.split()])
        except ValueError as exc:
            raise GroupConstructionError(f"non-integer entry in row {ln!r}") from exc
    return GroupTable(rows, label=label)


def build_group(spec: str) -> GroupTable:
    """Build a group from a spec string.

    `file:<path>` reads a multiplication-table file, `perm:<path>` reads
    permutation generators in cycle notation, anything else is a catalog
    name.
    """
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        with open(path, encoding="utf-8") as fh:
            return group_from_table_text(fh.read(), label=path)
    if spec.startswith("perm:"):
        path = spec[len("perm:"):]
        with open(path, encoding="utf-8") as fh:
            return permutation_group(fh.read().splitlines(), label=path)
    return catalog_group(spec)
