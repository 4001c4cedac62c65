"""Vanishing-off subgroups, Camina conditions, U(S|N), and VZ theories.

The predicates here (Camina elements/pairs/triples, generalized Camina
pairs, VZ) each admit several equivalent characterizations.  Every
characterization is evaluated independently and packaged into a
CaminaVerdict; nothing is derived from another condition, so a verdict
with disagreeing conditions is a genuine counterexample to the theorem it
encodes, never a shortcut artifact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import hermitian_term
from .errors import ConsistencyError
from .groups import (
    SubgroupSet,
    full_subgroup,
    generated_subgroup,
    quotient_group,
    subgroup_product,
    trivial_subgroup,
)
from .reports import CheckReport
from .structure import (
    SeriesResult,
    irr_over,
    is_s_abelian,
    lower_series,
    s_center,
    s_commutator,
    s_commutator_full,
    s_nilpotence_class,
    s_normal_subgroups,
    super_kernel,
)
from .supertheory import (
    SuperCharacter,
    SuperTheory,
    deflation,
    is_delta_product,
    is_star_product,
    require_s_normal,
    star_construct,
)


@dataclass
class CaminaVerdict:
    """Outcome of a multi-characterization predicate.

    `conditions` holds the independently evaluated equivalent conditions;
    `agreement` is True when they all coincide.  `extras` carries evaluated
    but non-asserted readings, `witnesses` counterexample payloads for the
    false conditions.
    """

    subject: str
    holds: bool
    conditions: dict[str, bool]
    agreement: bool
    vacuous: bool = False
    witnesses: dict[str, object] = field(default_factory=dict)
    extras: dict[str, object] = field(default_factory=dict)

    def to_json(self):
        out = {
            "subject": self.subject,
            "holds": self.holds,
            "agreement": self.agreement,
            "conditions": dict(self.conditions),
        }
        if self.vacuous:
            out["vacuous"] = True
        if self.witnesses:
            out["witnesses"] = {k: str(v) for k, v in self.witnesses.items()}
        if self.extras:
            out["extras"] = {k: str(v) for k, v in self.extras.items()}
        return out


# ---------------------------------------------------------------------------
# vanishing-off subgroups


def nonvanishing_set(sigma: SuperCharacter) -> frozenset[int]:
    """The elements where sigma is nonzero (exact test)."""
    S = sigma.theory
    out = set()
    for yi, b in enumerate(S.yparts.blocks):
        if not sigma.values[yi].is_zero():
            out |= b
    return frozenset(out)


def vanish_off(sigma: SuperCharacter) -> SubgroupSet:
    """V(sigma): the subgroup generated by the nonvanishing set, i.e. the
    smallest subgroup off which sigma vanishes."""
    S = sigma.theory
    key = ("vanish_off", sigma.index)
    if key not in S._memo:
        S._memo[key] = generated_subgroup(S.group, nonvanishing_set(sigma))
    return S._memo[key]


def v_rel(S: SuperTheory, N: SubgroupSet) -> SubgroupSet:
    """V(S|N): generated by the elements where some member of Irr(S|N) is
    nonzero.  S-normal, and contains N (trivially {1} when Irr(S|N) is
    empty, which happens exactly at N = 1)."""
    require_s_normal(S, N)
    key = ("v_rel", N.members)
    if key in S._memo:
        return S._memo[key]
    gens: set[int] = set()
    for sigma in irr_over(S, N):
        gens |= nonvanishing_set(sigma)
    V = generated_subgroup(S.group, gens)
    if not S.is_s_normal(V):
        raise ConsistencyError("V(S|N) is not S-normal")
    if not N.members <= V.members:
        raise ConsistencyError("V(S|N) does not contain N")
    S._memo[key] = V
    return V


def v_theory(S: SuperTheory) -> SubgroupSet:
    """V(S) = V(S|[G,S]); every sigma over [G,S] vanishes off it by
    construction of the generating set."""
    return v_rel(S, s_commutator_full(S))


# ---------------------------------------------------------------------------
# Camina conditions


def is_camina_element(S: SuperTheory, g: int) -> CaminaVerdict:
    """Four independent characterizations of an S-Camina element:
    all of Irr(S|[G,S]) vanish at g; Cl_S(g) = g[G,S]; |Cl_S(g)| = |[G,S]|;
    and every commutator-coset difference is realized inside Cl_S(g)."""
    key = ("camina_element", g)
    if key in S._memo:
        return S._memo[key]
    G = S.group
    com = s_commutator_full(S)
    cls = S.superclass(g)
    row = G.mul[g]
    witnesses: dict[str, object] = {}

    vanishing = True
    for sigma in irr_over(S, com):
        if not sigma.value_on(g).is_zero():
            vanishing = False
            witnesses["vanishing"] = f"sigma_{sigma.index}(g) = {sigma.value_on(g)}"
            break
    coset = frozenset(row[z] for z in com.members)
    class_is_coset = cls == coset
    if not class_is_coset:
        witnesses["class-coset"] = f"Cl_S({g}) = {sorted(cls)}, g[G,S] = {sorted(coset)}"
    size_match = len(cls) == len(com)
    if not size_match:
        witnesses["class-size"] = f"|Cl_S({g})| = {len(cls)}, |[G,S]| = {len(com)}"
    differences = {G.mul[G.inv[g]][y] for y in cls}
    transversal = com.members <= differences
    if not transversal:
        missing = min(com.members - differences)
        witnesses["transversal"] = f"no y in Cl_S({g}) with g^-1 y = {missing}"

    conditions = {
        "vanishing": vanishing,
        "class-coset": class_is_coset,
        "class-size": size_match,
        "transversal": transversal,
    }
    verdict = CaminaVerdict(
        f"element {g}",
        holds=vanishing,
        conditions=conditions,
        agreement=len(set(conditions.values())) == 1,
        witnesses=witnesses,
    )
    S._memo[key] = verdict
    return verdict


def is_s_gcp(S: SuperTheory, N: SubgroupSet) -> CaminaVerdict:
    """Generalized S-Camina pair (G, N): every element outside N is an
    S-Camina element, with the equivalent vanishing, class-size and
    transversal forms evaluated independently.

    The coset-product form is asserted in the reading "every superclass
    outside N is a union of [G,S]-cosets", available when [G,S] <= N; the
    literal "over N and [G,S]" reading is recorded in `extras` and only
    asserted when N = [G,S], where the two coincide.
    """
    require_s_normal(S, N)
    key = ("gcp", N.members)
    if key in S._memo:
        return S._memo[key]
    G = S.group
    com = s_commutator_full(S)
    outside = [g for g in range(G.order) if g not in N.members]
    witnesses: dict[str, object] = {}

    camina_all = True
    for g in outside:
        if not is_camina_element(S, g).holds:
            camina_all = False
            witnesses["camina-elements"] = f"element {g} is not an S-Camina element"
            break
    sizes_ok = all(len(S.superclass(g)) == len(com) for g in outside)
    if not sizes_ok:
        bad = next(g for g in outside if len(S.superclass(g)) != len(com))
        witnesses["class-sizes"] = f"|Cl_S({bad})| = {len(S.superclass(bad))} != {len(com)}"
    transversal_ok = True
    for g in outside:
        differences = {G.mul[G.inv[g]][y] for y in S.superclass(g)}
        if not com.members <= differences:
            transversal_ok = False
            witnesses["transversal"] = f"element {g} misses a commutator-coset difference"
            break
    vanishing_ok = True
    for sigma in irr_over(S, com):
        if any(not sigma.value_on(g).is_zero() for g in outside):
            vanishing_ok = False
            witnesses["vanishing"] = f"sigma_{sigma.index} does not vanish off N"
            break

    conditions = {
        "camina-elements": camina_all,
        "class-sizes": sizes_ok,
        "transversal": transversal_ok,
        "vanishing": vanishing_ok,
    }
    extras: dict[str, object] = {}
    if com.members <= N.members:
        conditions["coset-product"] = is_delta_product(S, com, N)
        if not conditions["coset-product"]:
            witnesses["coset-product"] = "some superclass outside N is not a union of [G,S]-cosets"
    if N.members <= com.members:
        literal = is_delta_product(S, N, com)
        extras["coset-product-literal"] = literal
        if N.members == com.members:
            conditions["coset-product-literal"] = literal
    verdict = CaminaVerdict(
        f"pair (G, {sorted(N.members)})",
        holds=camina_all,
        conditions=conditions,
        agreement=len(set(conditions.values())) == 1,
        vacuous=not outside,
        witnesses=witnesses,
        extras=extras,
    )
    S._memo[key] = verdict
    return verdict


def is_camina_triple(S: SuperTheory, N: SubgroupSet, M: SubgroupSet) -> CaminaVerdict:
    """S-Camina triple (G, N, M) with M <= N: five independent conditions,
    led by the defining one (superclasses outside N are unions of
    M-cosets)."""
    require_s_normal(S, N)
    require_s_normal(S, M)
    key = ("triple", N.members, M.members)
    if key in S._memo:
        return S._memo[key]
    G = S.group
    outside = [g for g in range(G.order) if g not in N.members]
    witnesses: dict[str, object] = {}

    coset = is_delta_product(S, M, N)
    if not coset:
        bad = next(
            b for b in S.yparts.blocks
            if not b & N.members
            and any(G.mul[g][m] not in b for g in b for m in M.members)
        )
        witnesses["coset-union"] = f"superclass {sorted(bad)} is not a union of M-cosets"
    defl = deflation(S, M)
    _, proj = quotient_group(G, M)
    size_product = True
    for g in outside:
        if len(S.superclass(g)) != len(defl.superclass(proj[g])) * len(M):
            size_product = False
            witnesses["class-size-product"] = (
                f"|Cl_S({g})| = {len(S.superclass(g))}, deflated class times |M| = "
                f"{len(defl.superclass(proj[g])) * len(M)}"
            )
            break
    transversal = True
    for g in outside:
        differences = {G.mul[G.inv[g]][k] for k in S.superclass(g)}
        if not M.members <= differences:
            transversal = False
            witnesses["transversal"] = f"element {g} misses an M-difference"
            break
    bound = v_rel(S, M).members <= N.members
    if not bound:
        witnesses["vanishing-bound"] = (
            f"V(S|M) = {sorted(v_rel(S, M).members)} escapes {sorted(N.members)}"
        )
    vanish = True
    for sigma in irr_over(S, M):
        if any(not sigma.value_on(g).is_zero() for g in outside):
            vanish = False
            witnesses["vanishing"] = f"sigma_{sigma.index} does not vanish outside N"
            break
    conditions = {
        "coset-union": coset,
        "class-size-product": size_product,
        "transversal": transversal,
        "vanishing-bound": bound,
        "vanishing": vanish,
    }
    verdict = CaminaVerdict(
        f"triple (G, {sorted(N.members)}, {sorted(M.members)})",
        holds=coset,
        conditions=conditions,
        agreement=len(set(conditions.values())) == 1,
        vacuous=not outside,
        witnesses=witnesses,
    )
    S._memo[key] = verdict
    return verdict


def is_camina_pair(S: SuperTheory, N: SubgroupSet) -> CaminaVerdict:
    """S-Camina pair (G, N): the triple conditions at M = N, the star
    construction actually reproducing S, V(S|N) = N, and the two-clause
    character condition.

    The two-clause condition degenerates at N = 1 (no character lies over
    the trivial subgroup), so there it is recorded but not asserted.
    """
    require_s_normal(S, N)
    key = ("pair", N.members)
    if key in S._memo:
        return S._memo[key]
    outside = [g for g in range(S.group.order) if g not in N.members]
    witnesses: dict[str, object] = {}

    coset = is_star_product(S, N)
    if not coset:
        mul = S.group.mul
        bad = next(
            b for b in S.yparts.blocks
            if not b & N.members
            and any(mul[g][n] not in b for g in b for n in N.members)
        )
        witnesses["coset-union"] = f"superclass {sorted(bad)} is not a union of N-cosets"
    construction = star_construct(S, N) == S
    if not construction:
        witnesses["construction"] = "the star construction over N differs from S"
    vsub = v_rel(S, N) == SubgroupSet(S.group, N.members)
    if not vsub:
        witnesses["vanishing-off"] = f"V(S|N) = {sorted(v_rel(S, N).members)}"
    over = irr_over(S, N)
    clause_a = all(sigma.value_on(g).is_zero() for sigma in over for g in outside)
    clause_b = all(
        any(not sigma.value_on(n).is_zero() for sigma in over) for n in sorted(N.members)
    )
    two_clause = clause_a and clause_b
    if not two_clause:
        witnesses["two-clause"] = f"clause a: {clause_a}, clause b: {clause_b}"

    conditions = {
        "coset-union": coset,
        "construction": construction,
        "vanishing-off": vsub,
    }
    extras: dict[str, object] = {}
    if len(N) > 1:
        conditions["two-clause"] = two_clause
    else:
        extras["two-clause-at-trivial-n"] = two_clause
    verdict = CaminaVerdict(
        f"pair (G, {sorted(N.members)})",
        holds=coset,
        conditions=conditions,
        agreement=len(set(conditions.values())) == 1,
        vacuous=not outside,
        witnesses=witnesses,
        extras=extras,
    )
    S._memo[key] = verdict
    return verdict


# ---------------------------------------------------------------------------
# the V- and U-series


def v_series(S: SuperTheory) -> SeriesResult:
    """V_1 = V(S), V_i = [V_{i-1}, S], until stabilization."""
    if "v_series" in S._memo:
        return S._memo["v_series"]
    terms = [v_theory(S)]
    while True:
        nxt = s_commutator(S, terms[-1])
        if not nxt.members <= terms[-1].members:
            raise ConsistencyError("V-series failed to descend")
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    result = SeriesResult("v-series", tuple(terms), True, 1)
    S._memo["v_series"] = result
    return result


def u_rel(S: SuperTheory, N: SubgroupSet) -> SubgroupSet:
    """U(S|N): the product of every S-normal H with V(S|H) <= N.

    By the definition this includes H = G when N = G, so U(S|G) = G; the
    containment U(S|N) <= N n [G,S] for non-S-abelian theories therefore
    holds (and is verified) only for proper N.
    """
    require_s_normal(S, N)
    key = ("u_rel", N.members)
    if key in S._memo:
        return S._memo[key]
    total = trivial_subgroup(S.group)
    for H in s_normal_subgroups(S):
        if v_rel(S, H).members <= N.members:
            total = subgroup_product(S.group, total, H)
    if not S.is_s_normal(total):
        raise ConsistencyError("U(S|N) is not S-normal")
    if not is_s_abelian(S) and len(N) < S.group.order:
        cap = N.members & s_commutator_full(S).members
        if not total.members <= cap:
            raise ConsistencyError("U(S|N) escapes N n [G,S]")
    S._memo[key] = total
    return total


def u_chain(S: SuperTheory, N: SubgroupSet) -> SeriesResult:
    """U^1 = U(S|N), U^i = U(S|U^{i-1}), until stabilization."""
    require_s_normal(S, N)
    terms = [u_rel(S, N)]
    while True:
        nxt = u_rel(S, terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesResult("u-chain", tuple(terms), True, 1)


def u_theory(S: SuperTheory) -> SubgroupSet:
    """U(S) = U(S|Z(S)); the whole group when the theory is S-abelian.
    For non-S-abelian theories the chain
    U(S) <= [G,S] n Z(S) <= [G,S]Z(S) <= V(S) is verified."""
    if is_s_abelian(S):
        return full_subgroup(S.group)
    center = s_center(S)
    U = u_rel(S, center)
    com = s_commutator_full(S)
    meet = com.members & center.members
    join = subgroup_product(S.group, com, center)
    V = v_theory(S)
    if not (U.members <= meet and join.members <= V.members):
        raise ConsistencyError("U(S) <= [G,S] n Z(S) <= [G,S]Z(S) <= V(S) fails")
    return U


def u_membership_check(S: SuperTheory, N: SubgroupSet, g: int) -> bool:
    """Membership of g in U(S|N) via the character-kernel test: every
    supercharacter whose kernel misses g must vanish off N.  The two routes
    are compared and a mismatch raises."""
    require_s_normal(S, N)
    outside = [x for x in range(S.group.order) if x not in N.members]
    rhs = True
    for sigma in S.supercharacters():
        if g in super_kernel(sigma).members:
            continue
        if any(not sigma.value_on(x).is_zero() for x in outside):
            rhs = False
            break
    direct = g in u_rel(S, N).members
    if rhs != direct:
        raise ConsistencyError(
            f"membership characterization fails for g={g}, N={sorted(N.members)}"
        )
    return direct


def u_quotient_check(S: SuperTheory, N: SubgroupSet, H: SubgroupSet) -> CheckReport:
    """Verify U(S^{G/N} | H/N) = U(S|H)/N, under the hypothesis
    V(S|N) <= H; otherwise the report is marked not applicable."""
    require_s_normal(S, N)
    require_s_normal(S, H)
    rep = CheckReport(
        f"U after deflation: N={sorted(N.members)}, H={sorted(H.members)}"
    )
    if not v_rel(S, N).members <= H.members:
        rep.note("hypothesis V(S|N) <= H fails; not applicable")
        return rep
    defl = deflation(S, N)
    _, proj = quotient_group(S.group, N)
    image_h = SubgroupSet(defl.group, {proj[x] for x in H.members})
    if not defl.is_s_normal(image_h):
        raise ConsistencyError("projected subgroup is not S-normal in the deflation")
    lhs = u_rel(defl, image_h)
    rhs = frozenset(proj[x] for x in u_rel(S, H).members)
    rep.add(
        "quotient-identity",
        lhs.members == rhs,
        f"deflated U = {lhs.sorted_members()}, projected U = {sorted(rhs)}",
    )
    return rep


def u_kernel_check(S: SuperTheory, N: SubgroupSet) -> CheckReport:
    """Verify U(S|N) as the intersection of the kernels of the
    supercharacters whose vanishing-off subgroup escapes N; an empty
    family means the intersection is all of G."""
    require_s_normal(S, N)
    rep = CheckReport(f"U as kernel intersection at N={sorted(N.members)}")
    family = [
        sigma for sigma in S.supercharacters() if not vanish_off(sigma).members <= N.members
    ]
    if not family:
        rep.note("the character family is empty; the intersection defaults to G")
        intersection = frozenset(range(S.group.order))
    else:
        acc = set(range(S.group.order))
        for sigma in family:
            acc &= super_kernel(sigma).members
        intersection = frozenset(acc)
    rep.add(
        "kernel-intersection",
        intersection == u_rel(S, N).members,
        f"intersection {sorted(intersection)}, U(S|N) {u_rel(S, N).sorted_members()}",
    )
    return rep


# ---------------------------------------------------------------------------
# VZ theories


def is_vz(S: SuperTheory) -> CaminaVerdict:
    """VZ: every supercharacter over [G,S] vanishes off Z(S).

    For non-S-abelian theories this is asserted equivalent to
    V(S) <= Z(S), Z(S) = V(S), and U(S) = [G,S]; when additionally
    [G,S] <= Z(S), the coset-product, class-size and transversal forms
    join the asserted set.
    """
    if "vz" in S._memo:
        return S._memo["vz"]
    G = S.group
    center = s_center(S)
    com = s_commutator_full(S)
    V = v_theory(S)
    outside = [g for g in range(G.order) if g not in center.members]
    witnesses: dict[str, object] = {}

    definition = True
    for sigma in irr_over(S, com):
        if any(not sigma.value_on(g).is_zero() for g in outside):
            definition = False
            witnesses["definition"] = f"sigma_{sigma.index} does not vanish off Z(S)"
            break
    v_below_z = V.members <= center.members
    if not v_below_z:
        witnesses["v-inside-center"] = f"V(S) = {sorted(V.members)}, Z(S) = {sorted(center.members)}"
    conditions = {"definition": definition, "v-inside-center": v_below_z}
    abelian = is_s_abelian(S)
    if not abelian:
        conditions["center-equals-v"] = center.members == V.members
        U = u_theory(S)
        conditions["u-equals-commutator"] = U.members == com.members
        if not conditions["u-equals-commutator"]:
            witnesses["u-equals-commutator"] = f"U(S) = {sorted(U.members)}, [G,S] = {sorted(com.members)}"
    if com.members <= center.members:
        conditions["coset-product"] = is_delta_product(S, com, center)
        defl = deflation(S, com)
        _, proj = quotient_group(G, com)
        size_ok = all(
            len(S.superclass(g)) == len(defl.superclass(proj[g])) * len(com)
            for g in outside
        )
        conditions["class-size-product"] = size_ok
        transversal = True
        for g in outside:
            differences = {G.mul[G.inv[g]][k] for k in S.superclass(g)}
            if not com.members <= differences:
                transversal = False
                break
        conditions["transversal"] = transversal
    verdict = CaminaVerdict(
        "VZ",
        holds=definition,
        conditions=conditions,
        agreement=len(set(conditions.values())) == 1,
        vacuous=not outside,
        witnesses=witnesses,
    )
    S._memo["vz"] = verdict
    return verdict


def scd_check(S: SuperTheory) -> CheckReport:
    """Supercharacter degrees of a non-S-abelian VZ theory: every part over
    [G,S] satisfies sigma(1)^2 = ||X||^2 |G : Z(S)| (exact integers), its
    values on Z(S) have |sigma(z)| = sigma(1), and the degree set is
    {1} u {|G : Z(S)|}."""
    rep = CheckReport(f"supercharacter degrees for a theory of {S.group.label}")
    if is_s_abelian(S) or not is_vz(S).holds:
        rep.note("not a non-S-abelian VZ theory; not applicable")
        return rep
    center = s_center(S)
    com = s_commutator_full(S)
    index = S.group.order // len(center)
    nonlinear = irr_over(S, com)
    for sigma in nonlinear:
        norm2 = sum(S.table.degrees[t] ** 2 for t in sigma.part)
        rep.add(
            f"degree-sigma-{sigma.index}",
            sigma.degree**2 == norm2 * index,
            f"sigma(1)^2 = {sigma.degree ** 2}, ||X||^2 |G:Z(S)| = {norm2 * index}",
        )
        for z in sorted(center.members):
            value = sigma.value_on(z)
            rep.add(
                f"central-modulus-sigma-{sigma.index}-z{z}",
                hermitian_term(value, value) == sigma.degree**2,
                f"|sigma({z})|^2 != sigma(1)^2",
            )
    degree_set = {sigma.degree for sigma in S.supercharacters()}
    expected = {1} | {index for _ in nonlinear}
    rep.add(
        "degree-set",
        degree_set == expected,
        f"scd(S) = {sorted(degree_set)}, expected {sorted(expected)}",
    )
    return rep


def v_series_checks(S: SuperTheory) -> CheckReport:
    """The V-series against the lower central series: interleaving,
    strictness propagation, and the deflated-series identity with its
    nilpotence-class claim."""
    rep = CheckReport(f"V-series checks for a theory of {S.group.label}")
    vs = v_series(S)
    low = lower_series(S)
    top = max(len(vs.terms), len(low.terms)) + 1
    for i in range(1, top + 1):
        ok = low.term(i + 1).members <= vs.term(i).members <= low.term(i).members
        rep.add(f"interleaving-{i}", ok)
    strict = [i for i in range(1, top + 1) if len(vs.term(i)) < len(low.term(i))]
    if strict:
        n = max(strict)
        ok = all(len(vs.term(i)) < len(low.term(i)) for i in range(1, n + 1))
        rep.add("strictness-propagation", ok, f"strict at {n} must be strict below")
    else:
        rep.note("V_i = gamma_i throughout; strictness propagation is vacuous")
    for n in range(1, top + 1):
        vn = vs.term(n)
        if not len(vn) < len(low.term(n)):
            continue
        defl = deflation(S, vn)
        _, proj = quotient_group(S.group, vn)
        cls = s_nilpotence_class(defl)
        rep.add(
            f"deflated-class-{n}",
            cls == n,
            f"deflation by V_{n} has class {cls}, expected {n}",
        )
        dvs = v_series(defl)
        for i in range(1, n + 1):
            image = frozenset(proj[g] for g in vs.term(i).members)
            rep.add(
                f"deflated-v-{n}-{i}",
                dvs.term(i).members == image,
                f"V_{i} of the deflation differs from the projected V_{i}",
            )
    return rep
