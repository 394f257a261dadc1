"""Content ideals and the bounded search for non-Gaussian witnesses.

Run with ``python3 notebooks/02_gaussian_search.py``.
"""
from ohmrush import (
    PolyAlgebra,
    content,
    dedekind_mertens_exponent,
    gaussian_pair_check,
    gaussian_witness_search,
    parse_poly,
    parse_ring,
)

R = parse_ring("F2[a,b]/(a^2,b^2)")
A = PolyAlgebra(R, ("s", "t"))
f = parse_poly("a*s + b*t", A)
print("c(f) =", content(f).text())

# One product is enough to see the failure: c(f^2) is zero but c(f)^2 is not.
check = gaussian_pair_check(f, f)
print("f*f Gaussian?", check.holds, " c(f)c(f) =", check.product_of_contents.text(),
      " c(ff) =", check.content_of_product.text())

# The search walks cofactors by degree and stops at the first witness.
rep = gaussian_witness_search(f, 2)
print(f"search: {rep.status} after {rep.enumerated} cofactors, witness {rep.witness.text()}")

# A principal content ideal behaves: no cofactor of degree 1 breaks it.
# Degree 2 would mean 16^6 cofactors, past the default budget.
h = parse_poly("a*s + a*b*t", A)
rep = gaussian_witness_search(h, 1)
print(f"c(h) = {content(h).text()}: {rep.status} over {rep.enumerated} cofactors")

# Sampling is available for spaces too large to walk; it is seeded.
rep = gaussian_witness_search(f, 1, mode="sampled", seed=7, samples=2000)
print("sampled:", rep.status, rep.enumerated)

# Over Z/4 the exponent is 1 when one side has unit content.
Z4 = PolyAlgebra(parse_ring("Z/4"), ("x",))
print("\nDedekind-Mertens k over Z/4:",
      dedekind_mertens_exponent(parse_poly("1 + 2*x", Z4), parse_poly("2 + 2*x", Z4)))
