"""A genus-6 cover with two maps to E, and the rank-2 twist family it produces."""

from mestre import covers, families

C = covers.cover_for_invariant(5)
print("E:", C.E)
print("cover: Y^2 =", C.S, " genus", C.genus)
print("omega/omega' =", C.ratio)

fam = families.twist_family(5)
print("isotrivial:", fam.isotrivial)
for t in range(2, 6):
    spec = families.specialize(fam, t)
    if spec.excluded:
        print(f"t={t}: excluded ({spec.excluded})")
        continue
    cert = families.certify(spec)
    print(f"t={t}: det={float(cert.gram.determinant.value):.8g}  {cert.verdict}")
