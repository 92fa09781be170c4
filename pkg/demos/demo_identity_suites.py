"""
Running the bundled identity suites
===================================

Every layer of the package is tied to its neighbours by exact
identities: Gauss sum closed forms, multiplicativity of complete sums,
the Weyl sum factorization, arc integral values, and the final count
agreement.  The verify module sweeps each identity over a grid and
reports every instance; the CLI exposes the same suites.
"""

from quadricpoints import SUITES, FieldCtx

F3 = FieldCtx(3)

print("available suites:", ", ".join(SUITES))

# run the lot over F_3 at the default (small) grid sizes
print(f"\n{'suite':<8} {'instances':>9} {'failures':>9}")
for name, run in SUITES.items():
    records = run(F3)
    bad = [r for r in records if not r["ok"]]
    print(f"{name:<8} {len(records):>9} {len(bad):>9}")
    for r in bad:
        print("   FAILED:", r["id"])

# each record names its instance, so a failure pinpoints the identity
records = SUITES["gauss"](F3, maxdeg=1, maxk=2)
print("\nsample gauss records:")
for r in records[:5]:
    print("  ", r)

# the same suites back the command line:
#   quadricpoints verify gauss --p 5
#   quadricpoints verify counts --p 3 --nmax 4 --pmax 2
