"""
Running the identity harness
============================

Every identity is registered with a default grid and tolerance. Reports
serialize to CSV or JSON, sorted, so repeated runs are byte-identical.
"""

from collections import Counter

from fgamma.verify import IDENTITIES, check_identity, emit_reports

for name, ident in sorted(IDENTITIES.items()):
    reports = check_identity(name)
    tally = Counter(r.status for r in reports)
    print(f"{name:30s} tol {ident.tolerance:.0e}  {dict(sorted(tally.items()))}")

###############################################################################
# A single report as CSV.

print()
print(emit_reports(check_identity("functional_eq", [2], [2.0, 2.5]), "csv"), end="")

# The same run from the shell:
#   fgamma verify --identity functional_eq --grid "s=1.2:3.0:0.2;k=1,2,3"
