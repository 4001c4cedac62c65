import itertools

import pytest

from superchar.chartab import character_table_of
from superchar.errors import SuperTheoryError
from superchar.groups import (
    SubgroupSet,
    catalog_group,
    derived_subgroup,
    full_subgroup,
    generated_subgroup,
    group_center,
    quotient_group,
    trivial_subgroup,
)
from superchar.structure import (
    deflated_gamma_check,
    hypercenter,
    irr_over,
    irr_quotient,
    is_s_abelian,
    is_s_normal,
    lower_series,
    s_center,
    s_commutator,
    s_commutator_full,
    s_nilpotence_class,
    s_normal_closure,
    s_normal_subgroups,
    super_kernel,
    upper_series,
)
from superchar.supertheory import coarsest, deflation, enumerate_scts, finest


def theory_of(name, kind="finest"):
    G = catalog_group(name)
    T = character_table_of(G)
    return G, (finest(T) if kind == "finest" else coarsest(T))


def all_subgroups_brute(G):
    # independent oracle: close every subset of generators of size <= 3
    found = {frozenset({0}), frozenset(range(G.order))}
    elems = range(1, G.order)
    for k in (1, 2, 3):
        for seed in itertools.combinations(elems, k):
            found.add(generated_subgroup(G, seed).members)
    return found


@pytest.mark.parametrize("name", ["S3", "Q8", "D4", "C6", "A4"])
def test_s_normal_enumeration_against_brute_force(name):
    G, S = theory_of(name)
    walked = {H.members for H in s_normal_subgroups(S)}
    brute = {
        members
        for members in all_subgroups_brute(G)
        if is_s_normal(S, SubgroupSet(G, members))
    }
    assert walked == brute


def test_s_normal_examples():
    G, S = theory_of("S3")
    assert [H.sorted_members() for H in s_normal_subgroups(S)] == [
        (0,),
        (0, 3, 4),
        (0, 1, 2, 3, 4, 5),
    ]
    G, S = theory_of("Q8", "coarsest")
    assert [len(H) for H in s_normal_subgroups(S)] == [1, 8]


def test_is_s_normal():
    G, S = theory_of("S3")
    assert is_s_normal(S, trivial_subgroup(G))
    assert is_s_normal(S, full_subgroup(G))
    assert is_s_normal(S, generated_subgroup(G, [3]))
    assert not is_s_normal(S, generated_subgroup(G, [1]))


def test_center_is_s_normal_everywhere():
    for name in ("S3", "Q8", "D4", "C6"):
        G = catalog_group(name)
        for S in enumerate_scts(character_table_of(G)):
            assert is_s_normal(S, s_center(S))


def test_center_examples():
    G, S = theory_of("C4")
    assert s_center(S) == full_subgroup(G)
    assert is_s_abelian(S)
    G, S = theory_of("C4", "coarsest")
    assert s_center(S).sorted_members() == (0,)
    assert not is_s_abelian(S)
    G, S = theory_of("Q8")
    assert s_center(S).sorted_members() == (0, 1)


def test_finest_center_and_commutator_match_classical():
    for name in ("S3", "Q8", "D4", "A4", "D6", "S4"):
        G, S = theory_of(name)
        assert s_center(S) == group_center(G)
        assert s_commutator_full(S) == derived_subgroup(G)


def test_commutator_examples():
    G, S = theory_of("C2xC2")
    assert s_commutator_full(S).sorted_members() == (0,)
    G, S = theory_of("S3")
    assert s_commutator_full(S).sorted_members() == (0, 3, 4)
    G, S = theory_of("S3", "coarsest")
    assert len(s_commutator_full(S)) == 6


def test_commutator_of_smaller_subgroup():
    G, S = theory_of("Q8")
    Z = SubgroupSet(G, [0, 1])
    assert s_commutator(S, Z).sorted_members() == (0,)
    i_sub = generated_subgroup(G, [2])
    # the class of i is {i, -i}, so i^-1 * (-i) = -1 generates the center
    assert s_commutator(S, i_sub).sorted_members() == (0, 1)


def test_super_kernels():
    G, S = theory_of("S3")
    sigmas = S.supercharacters()
    assert super_kernel(sigmas[0]) == full_subgroup(G)
    assert super_kernel(sigmas[1]).sorted_members() == (0, 3, 4)
    assert super_kernel(sigmas[2]).sorted_members() == (0,)


def test_irr_over_and_quotient_partition():
    G, S = theory_of("S3")
    A3 = generated_subgroup(G, [3])
    over = irr_over(S, A3)
    assert [sigma.index for sigma in over] == [2]
    assert irr_over(S, trivial_subgroup(G)) == ()
    quot = irr_quotient(S, A3)
    assert {s.index for s in quot} | {s.index for s in over} == {0, 1, 2}


def test_irr_monotonicity_both_directions():
    for name in ("Q8", "D4", "C6"):
        G = catalog_group(name)
        T = character_table_of(G)
        for S in enumerate_scts(T):
            subs = s_normal_subgroups(S)
            over = {N.members: {s.index for s in irr_over(S, N)} for N in subs}
            for M in subs:
                for N in subs:
                    assert (over[M.members] <= over[N.members]) == (
                        M.members <= N.members
                    )


def test_lemma_quotient_normality_transfer():
    # for S-normal N <= M: M is S-normal iff M/N is normal for the deflation
    for name in ("Q8", "D4"):
        G = catalog_group(name)
        T = character_table_of(G)
        for S in enumerate_scts(T):
            subs = s_normal_subgroups(S)
            for N in subs:
                defl = deflation(S, N)
                _, proj = quotient_group(G, N)
                for M in subs:
                    if not N.members <= M.members:
                        continue
                    image = SubgroupSet(defl.group, {proj[g] for g in M.members})
                    assert defl.is_s_normal(image)
                # converse: preimages of deflated S-normal subgroups are S-normal
                for Mq in s_normal_subgroups(defl):
                    preimage = SubgroupSet(
                        G, {g for g in range(G.order) if proj[g] in Mq.members}
                    )
                    assert S.is_s_normal(preimage)
                    assert N.members <= preimage.members


def test_series_examples():
    G, S = theory_of("Q8")
    up = upper_series(S)
    low = lower_series(S)
    assert [H.sorted_members() for H in up.terms] == [(0,), (0, 1), tuple(range(8))]
    assert [H.sorted_members() for H in low.terms] == [tuple(range(8)), (0, 1), (0,)]
    assert s_nilpotence_class(S) == 2
    assert hypercenter(S) == full_subgroup(G)

    G, S = theory_of("S3")
    assert s_nilpotence_class(S) is None
    assert hypercenter(S).sorted_members() == (0,)
    assert upper_series(S).terms == (trivial_subgroup(G),)

    G, S = theory_of("C4")
    assert s_nilpotence_class(S) == 1


def test_series_term_clamping():
    G, S = theory_of("Q8")
    up = upper_series(S)
    assert up.term(10) == full_subgroup(G)
    low = lower_series(S)
    assert low.term(10).sorted_members() == (0,)
    with pytest.raises(IndexError):
        up.term(-1)


def test_trivial_group_class_is_zero():
    G = catalog_group("C1")
    S = finest(character_table_of(G))
    assert s_nilpotence_class(S) == 0


def test_s_normal_closure():
    G, S = theory_of("S3")
    assert s_normal_closure(S, []).sorted_members() == (0,)
    assert s_normal_closure(S, [1]) == full_subgroup(G)
    assert s_normal_closure(S, [3]).sorted_members() == (0, 3, 4)
    q8, Sq = theory_of("Q8")
    assert s_normal_closure(Sq, [2]) == generated_subgroup(q8, [2])


def test_s_normal_closure_is_smallest():
    for name in ("S3", "Q8", "D4"):
        G, S = theory_of(name)
        subs = s_normal_subgroups(S)
        for seed in ([1], [2], [1, 2]):
            closure = s_normal_closure(S, seed)
            containing = [N for N in subs if set(seed) <= N.members]
            smallest = min(containing, key=len)
            assert closure == smallest


def test_deflated_gamma_identity():
    for name in ("S3", "Q8", "D4", "A4"):
        G, S = theory_of(name)
        for N in s_normal_subgroups(S):
            assert deflated_gamma_check(S, N).ok


def test_upper_series_rejects_bad_input():
    G, S = theory_of("S3")
    with pytest.raises(SuperTheoryError):
        irr_over(S, generated_subgroup(G, [1]))
