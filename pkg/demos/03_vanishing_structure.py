"""Vanishing-off subgroups, Camina structure, and VZ theories.

The walkthrough follows two contrasting examples: the finest theory of
S3 (a classical Camina pair, not nilpotent) and the finest theory of Q8
(a VZ theory of nilpotence class 2 where Z(S) = [G,S] = V(S) = U(S)).
"""

from superchar import (
    catalog_group,
    character_table_of,
    finest,
    generated_subgroup,
    is_camina_element,
    is_camina_pair,
    is_s_gcp,
    is_vz,
    lower_series,
    s_center,
    s_commutator_full,
    s_nilpotence_class,
    s_normal_subgroups,
    scd_check,
    u_rel,
    u_theory,
    upper_series,
    v_series,
    v_theory,
)


def show(name):
    G = catalog_group(name)
    S = finest(character_table_of(G))
    print(f"=== finest theory of {name} ===")
    print(f"Z(S)   = {sorted(s_center(S).members)}")
    print(f"[G,S]  = {sorted(s_commutator_full(S).members)}")
    print(f"V(S)   = {sorted(v_theory(S).members)}")
    print(f"U(S)   = {sorted(u_theory(S).members)}")
    print(f"upper series: {[sorted(t.members) for t in upper_series(S).terms]}")
    print(f"lower series: {[sorted(t.members) for t in lower_series(S).terms]}")
    print(f"V-series:     {[sorted(t.members) for t in v_series(S).terms]}")
    print(f"nilpotence class: {s_nilpotence_class(S)}")
    print(f"VZ: {is_vz(S).holds}")
    for N in s_normal_subgroups(S):
        gcp = is_s_gcp(S, N)
        pair = is_camina_pair(S, N)
        print(
            f"  N = {sorted(N.members)}: U(S|N) = {sorted(u_rel(S, N).members)}, "
            f"GCP {gcp.holds}{' (vacuous)' if gcp.vacuous else ''}, "
            f"Camina pair {pair.holds}"
        )
    print()
    return G, S


g_s3, s_s3 = show("S3")

# every transposition is an S-Camina element: its superclass is a full
# coset of the commutator subgroup, and the nonlinear character dies on it
for g in range(g_s3.order):
    verdict = is_camina_element(s_s3, g)
    print(f"element {g}: Camina element = {verdict.holds} "
          f"(all four characterizations agree: {verdict.agreement})")
print()

g_q8, s_q8 = show("Q8")

# Q8 is a VZ theory, so the nonlinear supercharacter degree is forced:
# sigma(1) = ||X|| sqrt(|G : Z(S)|) = 2 * 2 = 4
print(scd_check(s_q8))
