"""Structural apparatus on top of a supercharacter theory.

S-normal subgroups, the center Z(S) and commutator [H,S], supercharacter
kernels, the upper and lower central series, nilpotence, hypercenter, and
normal closure.  Cross-checkable identities (the kernel-intersection form
of [G,S], kernels as intersections of classical kernels) are verified on
every call; a mismatch raises ConsistencyError because it would falsify
the theory these constructions rest on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, GroupConstructionError, SuperTheoryError
from .groups import (
    SubgroupSet,
    full_subgroup,
    generated_subgroup,
    quotient_group,
    subgroup_product,
    trivial_subgroup,
)
from .reports import CheckReport
from .supertheory import SuperCharacter, SuperTheory, deflation, require_s_normal

_MAX_BLOCKS_FOR_ENUMERATION = 16


def is_s_normal(S: SuperTheory, H: SubgroupSet) -> bool:
    return S.is_s_normal(H)


def s_normal_subgroups(S: SuperTheory) -> tuple[SubgroupSet, ...]:
    """All subgroups that are unions of superclasses, smallest first.

    Walks subsets of the nonidentity superclasses, using the fact that
    products of superclasses are unions of superclasses to test closure
    blockwise.
    """
    if "s_normal" in S._memo:
        return S._memo["s_normal"]
    blocks = S.yparts.blocks
    b = len(blocks)
    if b > _MAX_BLOCKS_FOR_ENUMERATION:
        raise SuperTheoryError(f"{b} superclasses exceed the subgroup-walk bound")
    G = S.group
    products: list[list[frozenset[int]]] = []
    for bi in blocks:
        row = []
        for bj in blocks:
            hit = {S.yparts.block_of[G.mul[x][y]] for x in bi for y in bj}
            row.append(frozenset(hit))
        products.append(row)
    sizes = [len(bk) for bk in blocks]
    found = []
    for mask in range(1 << (b - 1)):
        chosen = [0] + [i + 1 for i in range(b - 1) if mask >> i & 1]
        total = sum(sizes[i] for i in chosen)
        if G.order % total:
            continue
        chosen_set = frozenset(chosen)
        if all(products[i][j] <= chosen_set for i in chosen for j in chosen):
            members = set()
            for i in chosen:
                members |= blocks[i]
            found.append(SubgroupSet(G, members))
    found.sort(key=lambda H: (len(H), H.sorted_members()))
    result = tuple(found)
    S._memo["s_normal"] = result
    return result


def s_center(S: SuperTheory) -> SubgroupSet:
    """Z(S): the union of the singleton superclasses."""
    if "center" not in S._memo:
        members = set()
        for b in S.yparts.blocks:
            if len(b) == 1:
                members |= b
        try:
            S._memo["center"] = SubgroupSet(S.group, members)
        except GroupConstructionError as exc:
            raise ConsistencyError("Z(S) is not a subgroup; the theory is invalid") from exc
    return S._memo["center"]


def is_s_abelian(S: SuperTheory) -> bool:
    return len(s_center(S)) == S.group.order


def s_commutator(S: SuperTheory, H: SubgroupSet) -> SubgroupSet:
    """[H,S] = <g^-1 k : g in H, k in Cl_S(g)>.

    For H = G the result is cross-checked against the intersection of the
    kernels of the supercharacters that factor through G/[G,S].
    """
    key = ("commutator", H.members)
    if key in S._memo:
        return S._memo[key]
    G = S.group
    gens = set()
    for g in H.members:
        row = G.mul[G.inv[g]]
        gens.update(row[k] for k in S.superclass(g))
    W = generated_subgroup(G, gens)
    if len(H) == G.order:
        acc = set(range(G.order))
        for sigma in S.supercharacters():
            ker = super_kernel(sigma)
            if W.members <= ker.members:
                acc &= ker.members
        if frozenset(acc) != W.members:
            raise ConsistencyError("[G,S] disagrees with its kernel-intersection form")
    S._memo[key] = W
    return W


def s_commutator_full(S: SuperTheory) -> SubgroupSet:
    """[G,S]."""
    return s_commutator(S, full_subgroup(S.group))


def super_kernel(sigma: SuperCharacter) -> SubgroupSet:
    """ker(sigma) = {g : sigma(g) = sigma(1)}; S-normal by construction and
    equal to the intersection of the classical kernels of its part."""
    S = sigma.theory
    key = ("kernel", sigma.index)
    if key in S._memo:
        return S._memo[key]
    degree = sigma.values[0]
    members = set()
    for yi, b in enumerate(S.yparts.blocks):
        if sigma.values[yi] == degree:
            members |= b
    try:
        ker = SubgroupSet(S.group, members)
    except GroupConstructionError as exc:
        raise ConsistencyError("supercharacter kernel is not a subgroup") from exc
    classical = set(range(S.group.order))
    for t in sigma.part:
        classical &= S.table.char_kernel(t).members
    if frozenset(classical) != ker.members:
        raise ConsistencyError(
            "supercharacter kernel disagrees with the classical kernel intersection"
        )
    S._memo[key] = ker
    return ker


def irr_over(S: SuperTheory, N: SubgroupSet) -> tuple[SuperCharacter, ...]:
    """Irr(S|N): supercharacters whose kernel does not contain N."""
    require_s_normal(S, N)
    return tuple(
        sigma for sigma in S.supercharacters() if not N.members <= super_kernel(sigma).members
    )


def irr_quotient(S: SuperTheory, N: SubgroupSet) -> tuple[SuperCharacter, ...]:
    """Irr(S/N): supercharacters whose kernel contains N."""
    require_s_normal(S, N)
    return tuple(
        sigma for sigma in S.supercharacters() if N.members <= super_kernel(sigma).members
    )


# ---------------------------------------------------------------------------
# series


@dataclass(frozen=True)
class SeriesResult:
    """A stabilized subgroup series; `term(i)` clamps past stabilization."""

    kind: str
    terms: tuple[SubgroupSet, ...]
    stabilized: bool
    start_index: int
    class_index: int | None = None

    def term(self, i: int) -> SubgroupSet:
        idx = i - self.start_index
        if idx < 0:
            raise IndexError(f"{self.kind} series has no term {i}")
        return self.terms[min(idx, len(self.terms) - 1)]

    @property
    def last(self) -> SubgroupSet:
        return self.terms[-1]

    def to_json(self):
        return {
            "kind": self.kind,
            "start_index": self.start_index,
            "terms": [H.sorted_members() for H in self.terms],
            "class_index": self.class_index,
        }


def lower_series(S: SuperTheory) -> SeriesResult:
    """gamma_1 = G, gamma_{i+1} = [gamma_i, S], until stabilization."""
    if "lower_series" in S._memo:
        return S._memo["lower_series"]
    terms = [full_subgroup(S.group)]
    while True:
        nxt = s_commutator(S, terms[-1])
        if not nxt.members <= terms[-1].members:
            raise ConsistencyError("lower series failed to descend")
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    result = SeriesResult("lower", tuple(terms), True, 1)
    S._memo["lower_series"] = result
    return result


def upper_series(S: SuperTheory) -> SeriesResult:
    """zeta_0 = 1 and zeta_i / zeta_{i-1} = Z(S^{G/zeta_{i-1}}), pulled back
    through the projection, until stabilization."""
    if "upper_series" in S._memo:
        return S._memo["upper_series"]
    G = S.group
    terms = [trivial_subgroup(G)]
    while True:
        prev = terms[-1]
        defl = deflation(S, prev)
        _, proj = quotient_group(G, prev)
        zq = s_center(defl)
        nxt = SubgroupSet(G, {g for g in range(G.order) if proj[g] in zq.members})
        if not S.is_s_normal(nxt):
            raise ConsistencyError("upper series term is not S-normal")
        if nxt == prev:
            break
        terms.append(nxt)
    class_index = None
    if len(terms[-1]) == G.order:
        class_index = next(i for i, H in enumerate(terms) if len(H) == G.order)
    result = SeriesResult("upper", tuple(terms), True, 0, class_index)
    S._memo["upper_series"] = result
    return result


def hypercenter(S: SuperTheory) -> SubgroupSet:
    """The stabilized top of the upper series."""
    return upper_series(S).last


def s_nilpotence_class(S: SuperTheory) -> int | None:
    """Nilpotence class from the upper series, cross-checked against the
    lower series; None when the theory is not S-nilpotent."""
    up = upper_series(S)
    low = lower_series(S)
    upper_class = up.class_index
    lower_class = None
    if len(low.last) == 1:
        first_trivial = next(i for i, H in enumerate(low.terms) if len(H) == 1)
        lower_class = first_trivial + low.start_index - 1
    if S.group.order > 1 and upper_class != lower_class:
        raise ConsistencyError(
            f"upper and lower series disagree on the class: {upper_class} vs {lower_class}"
        )
    if S.group.order == 1:
        return 0
    return upper_class


def s_normal_closure(S: SuperTheory, seed) -> SubgroupSet:
    """Smallest S-normal subgroup containing the seed: alternate subgroup
    generation with superclass saturation until a fixpoint."""
    G = S.group
    current = generated_subgroup(G, seed).members
    while True:
        saturated = set()
        for g in current:
            saturated |= S.superclass(g)
        if saturated == current:
            return SubgroupSet(G, current)
        current = generated_subgroup(G, saturated).members


def deflated_gamma_check(S: SuperTheory, N: SubgroupSet) -> CheckReport:
    """Verify gamma_i(S^{G/N}) = image of gamma_i(S) N, for all i up to
    stabilization of both series."""
    require_s_normal(S, N)
    rep = CheckReport(f"deflated lower series against {sorted(N.members)}")
    defl = deflation(S, N)
    _, proj = quotient_group(S.group, N)
    low = lower_series(S)
    low_q = lower_series(defl)
    top = max(len(low.terms), len(low_q.terms)) + 1
    for i in range(1, top + 1):
        lifted = subgroup_product(S.group, low.term(i), N)
        image = frozenset(proj[g] for g in lifted.members)
        rep.add(
            f"gamma_{i}",
            image == low_q.term(i).members,
            f"projected {sorted(image)}, deflated {low_q.term(i).sorted_members()}",
        )
    return rep
