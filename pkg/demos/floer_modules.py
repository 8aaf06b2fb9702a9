# Graded Floer modules of branched double covers.
#
# The double cover of a 3-braid closure with nonzero determinant is a
# +-1/k-surgery on the binding of a genus-one open book, so its module in
# the distinguished spin-c structure is a grading-shifted row of one of two
# small tables: the 1/n-surgeries and the 0-surgeries on the two trefoils
# and the figure-eight knot.

from threebraid import (
    FIGURE_EIGHT_LIKE,
    LEFT_TREFOIL_LIKE,
    RIGHT_TREFOIL_LIKE,
    Family1,
    Family2,
    Family3,
    classify,
    correction_term,
    hf_plus_s0,
    hfk_binding,
    is_l_space,
    parse,
    surgery_table,
    torus_bundle_hf,
    zero_surgery_table,
)

print("1/n-surgery table")
print("-" * 60)
for tag in (RIGHT_TREFOIL_LIKE, LEFT_TREFOIL_LIKE, FIGURE_EIGHT_LIKE):
    for n in (-2, -1, 0, 1, 2):
        print(f"{tag:17} n={n:+d}   {surgery_table(tag, n)}")
    print()

print("0-surgery table")
print("-" * 60)
for tag in (RIGHT_TREFOIL_LIKE, LEFT_TREFOIL_LIKE, FIGURE_EIGHT_LIKE):
    print(f"{tag:17} {zero_surgery_table(tag)}")

# Assembled modules.  An L-space is detected by a bare tower.
print()
print("assembled modules in the distinguished spin-c structure")
print("-" * 60)
for form in (Family2(1, -1),        # the lens space L(4,1)
             Family1(1, (5,)),      # double cover of the mirror of 8_20
             Family1(0, (1, 1)),    # double cover of the figure-eight
             Family1(3, (1,)),      # not an L-space: extra free summand
             Family3(2, -3)):       # double cover of the torus knot T(3,4)
    print(f"{str(form):26} HF+ = {hf_plus_s0(form)}"
          f"   d = {correction_term(form)}   L-space: {is_l_space(form)}")

# Capping off the boundary and doing 0-surgery on the binding instead gives
# a torus bundle whose homology lives in finitely many spin-c structures.
print()
print("torus bundle over the figure-eight monodromy")
info = torus_bundle_hf(classify(parse("x y^-1 x y^-1")))
print("  s0 part:      ", info.s0)
print("  other torsion: %d structures, each %s"
      % (info.non_s0_count, info.non_s0_relative))

# For L-space covers, the knot-Floer ranks of the binding follow one of
# three patterns, matching which of the two contact invariants survives.
print()
print("binding rank profiles (L-space covers only)")
for form in (Family1(1, (1,)), Family2(-1, 1), Family1(0, (1, 1))):
    profile = hfk_binding(form)
    print(f"  {str(form):26} ranks {profile.ranks} "
          f"arrows {profile.arrows}")
