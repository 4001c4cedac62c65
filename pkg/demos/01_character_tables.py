"""Building groups and computing exact character tables.

Groups come from a catalog of named constructions, from permutation
generators in cycle notation, or from raw multiplication tables.  Every
character value is an exact cyclotomic number, so orthogonality checks
are equalities, not approximations.
"""

from superchar import (
    catalog_group,
    conjugacy_classes,
    dixon_character_table,
    permutation_group,
    validate_table,
)

# --- a catalog group ------------------------------------------------------

s3 = catalog_group("S3")
print(f"{s3.label}: order {s3.order}, exponent {s3.exponent()}")
classes = conjugacy_classes(s3)
print("conjugacy classes:", [sorted(b) for b in classes.blocks])

table = dixon_character_table(s3)
print()
print(table.to_text())

# The degree-2 character vanishes on the transpositions and takes -1 on
# the 3-cycles; both statements are exact zero tests.
chi = table.values[2]
print("chi_2 on transpositions is exactly zero:", chi[1].is_zero())
print("chi_2 on 3-cycles:", chi[2])

# --- validation is exact --------------------------------------------------

report = validate_table(table)
print()
print(report)

# --- permutation generators -----------------------------------------------

d4 = permutation_group(["(1 2 3 4)", "(1 3)"], label="D4-from-perms")
print()
print(f"closure of (1 2 3 4), (1 3): order {d4.order}")
print(dixon_character_table(d4).to_text())

# --- a group with irrational character values ------------------------------

d5 = catalog_group("D5")
t5 = dixon_character_table(d5)
print("D5 has golden-ratio values written in the power basis of Q(zeta_10):")
print(t5.to_text())
