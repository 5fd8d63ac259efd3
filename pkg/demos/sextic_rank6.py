"""Six points on a j = 0 family, and what the choice of origin does to the determinant.

The cubic model r(x) + y^3 = 0 has a rational point at infinity O.  Using O
as the identity or using the second intersection R of the tangent at O gives
isomorphic curves but different point sets (they differ by translation), so
the Gram determinants differ by a rational square factor.
"""

from mestre import families

for origin in ("infinity", "tangent"):
    fam = families.sextic_family_0(origin=origin)
    spec = families.specialize(fam, 1)
    cert = families.certify(spec)
    det = cert.gram.determinant
    print(f"origin={origin:8s} det={float(det.value):.12g}  verdict={cert.verdict}")

fam = families.sextic_family_0()
print("twist class of the Weierstrass model: y^2 = x^3 %s 16 D" % ("+" if fam.notes["twist_sign"] == 1 else "-"))
print("irreducibility witness below 200:", fam.notes["irreducibility_witness"])
print("irreducibility witness below 300:", families.sextic_family_0(witness_bound=300).notes["irreducibility_witness"])
