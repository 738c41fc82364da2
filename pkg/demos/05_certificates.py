"""
Certificates that a Hamiltonian fibration c-splits
===================================================

The Leray-Serre differential on page r lowers the canonical filtration level
by r - 1.  When the fiber's filtration jumps within fewer levels than that,
every differential from page r on vanishes and H*(P) = H*(M) (x) H*(B).
"""
import json

from lefrank.cohomology import SymplecticData
from lefrank.constructions import catalog, projective_space, symplectic_nilmanifold
from lefrank.spectral import FibrationSpec, certify_csplitting

cp2 = SymplecticData.of(projective_space(2), "h")
cert = certify_csplitting(FibrationSpec(cp2, (1, 0, 1)))
print("CP^2 over S^2:")
print(json.dumps(cert.to_json(), indent=2))

# Kodaira-Thurston fiber: hard Lefschetz fails, so the certificate starts at
# page 4 and records the external theorem it relies on
kt = symplectic_nilmanifold(catalog("kodaira-thurston"))
cert = certify_csplitting(FibrationSpec(kt, (1, 0, 2, 0, 1)))
print("Kodaira-Thurston over S^2 x S^2: certified=%s r0=%d axioms=%s total=%s"
      % (cert.certified, cert.r0, cert.axioms, cert.total_betti))

# a 6-dim nilmanifold where omega: H^1 -> H^3 is not injective
fil = symplectic_nilmanifold(catalog("n6-filiform"))
cert = certify_csplitting(FibrationSpec(fil, (1, 0, 1)))
print("filiform fiber: certified=%s" % cert.certified)
for line in cert.reason:
    print("  -", line)
