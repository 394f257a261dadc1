"""Small local rings, their socles, and which of them are Gorenstein.

Run with ``python3 notebooks/01_rings_and_ideals.py``.
"""
from ohmrush import (
    annihilator,
    crt_decompose,
    double_annihilator_closed,
    ideal_span,
    is_gorenstein,
    maximal_ideal,
    min_generators,
    parse_ring,
    socle,
    socle_dimension,
)
from ohmrush.ideals import cyclic_ideals

# A ring is written the way you would on paper. Monomial quotients are
# normalised, so (a,b)^2 and (a^2,a*b,b^2) are the same ring.
for text in ["F2[a,b]/(a,b)^2", "F2[a,b]/(a^2,b^2)", "F2[a,b]/(a^3,b^2)", "Z/9"]:
    R = parse_ring(text)
    print(f"{R.text():28s} size={R.size():3d} socle dim={socle_dimension(R)} "
          f"gorenstein={is_gorenstein(R)}")

# The socle of F2[a,b]/(a,b)^2 is the whole maximal ideal, two-dimensional.
R = parse_ring("F2[a,b]/(a,b)^2")
m = maximal_ideal(R)
print("\nsocle == m:", socle(R) == m, " mu(m) =", min_generators(m))

# Taking the annihilator twice recovers an ideal only in the Gorenstein case.
a = ideal_span(R, [R.gen("a")])
print("I = (a), ann(I) =", annihilator(a).text(), " ann(ann(a)) =", annihilator(annihilator(a)).text())
G = parse_ring("F2[a,b]/(a^2,b^2)")
print("every cyclic ideal closed in", G.text(), ":",
      all(double_annihilator_closed(I) for I in cyclic_ideals(G)))

# Z/n is not local in general; it splits into local factors.
print("\nZ/360 =", " x ".join(f.ring.text() for f in crt_decompose(parse_ring("Z/360"))))
