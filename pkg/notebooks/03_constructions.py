"""The two explicit constructions: a Gaussian element with two-generated
content, and a non-Gaussian pair over a polynomial ring in two variables.

Run with ``python3 notebooks/03_constructions.py``.
"""
import json

from ohmrush import forge_nongauss_pair, parse_ring
from ohmrush.forge import forge_nongor_gaussian

# Over a non-Gorenstein ring two independent socle elements give an f whose
# content needs two generators and which is nonetheless Gaussian.
R = parse_ring("F2[a,b]/(a,b)^2")
f, rec = forge_nongor_gaussian(R)
print("f =", f.text(), " mu(c(f)) =", rec.mu)
print(f"checked {rec.report.enumerated} cofactors: {rec.report.status}")
print(f"unit-content cofactors {rec.unit_branch}, the rest {rec.nonunit_branch}; "
      f"branch identities hold: {rec.branches_hold}")

# Three variables give 81^4 cofactors at the default box bound, past the
# budget, so the answer is honest about it.
f3, rec3 = forge_nongor_gaussian(parse_ring("F3[a,b,c]/(a,b,c)^2"))
print("\nthree variables, box bound:", rec3.report.status)
f3, rec3 = forge_nongor_gaussian(parse_ring("F3[a,b,c]/(a,b,c)^2"), 1, "total")
print("three variables, total degree 1:", rec3.report.status, rec3.report.enumerated)

# Over a field, f = u*s + v*t and g = v*s + u*t have c(f)c(g) = (u,v)^2
# but c(fg) = (uv, u^2+v^2), one dimension short in degree 2.
for field in (5, 0):
    _, _, cert = forge_nongauss_pair(field)
    d = cert.to_dict()
    print(f"\n{d['field']}: dimensions {d['dimensions']}, gaussian {d['gaussian']}")
print(json.dumps(cert.to_dict(), indent=2))
