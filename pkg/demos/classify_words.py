# Classifying 3-braid words into their conjugacy normal form.
#
# Every word in the braid generators x, y (and their inverses) is conjugate
# to exactly one model word: a positive-twist pseudo-Anosov form
# h^d x y^-a1 ... x y^-an, a power form h^d y^m, or a finite-order form
# h^d x^m y^-1.  The classifier works through the image in PSL(2,Z).

from threebraid import canonical_word, classify, is_conjugate, parse

zoo = [
    "",                      # the identity: closure is the 3-component unlink
    "h",                     # the full twist
    "x y^-1",                # closure is the unknot
    "x y x y",               # closure is the right trefoil
    "x y^-1 x y^-1",         # closure is the figure-eight knot
    "h x y^-5",              # closure is the mirror of the knot 8_20
    "x x y x x",             # a lens-space double cover
    "y^7",                   # parabolic: a connected sum of Hopf-like pieces
    "x^-2 y^-1",             # finite order in the mapping class group
    "s1 s2^-1 s1 s2^-1",     # the braid-generator spelling also parses
]

print("word".ljust(22), "normal form".ljust(28), "model word")
print("-" * 78)
for text in zoo:
    form = classify(parse(text))
    print((text or "(empty)").ljust(22), str(form).ljust(28),
          str(canonical_word(form)) or "(empty)")

# Conjugacy is decidable: two words are conjugate exactly when their normal
# forms coincide.  The two braid generators themselves are conjugate (the
# chain relation x y x = y x y rewrites one into the other), but a generator
# is never conjugate to its inverse since exponent sums differ.

print()
print("x ~ y            :", is_conjugate(parse("x"), parse("y")))
print("x ~ x^-1         :", is_conjugate(parse("x"), parse("x^-1")))
print("cyclic rotation  :", is_conjugate(parse("x y^-1 x y^-2"),
                                         parse("x y^-2 x y^-1")))

# A conjugate of x y^-4 in heavy disguise:
w = parse("y x y^-3 y^-1 x^-1")
print("disguised x y^-4 :", classify(w))
