"""
Driving the package from the command line
=========================================

The console script `quadricpoints` wraps the library: counts, tables,
and verification suites, with JSON or CSV output.  This demo shells out
to the installed entry point exactly as a user would.
"""

import subprocess


def show(args):
    print("$ " + " ".join(args))
    proc = subprocess.run(args, capture_output=True, text=True)
    print(proc.stdout.rstrip())
    if proc.returncode != 0:
        print(f"  (exit code {proc.returncode}: {proc.stderr.strip()})")
    print()


# one count, every method, CSV projection
show(
    [
        "quadricpoints", "count", "--p", "3", "--coeffs", "1,1,1,2",
        "--P", "1", "--method", "exact,circle,brute,conv", "--emit", "csv",
    ]
)

# a growth table over a P range
show(
    [
        "quadricpoints", "table", "--p", "3", "--coeffs", "1,1,1",
        "--P-range", "1..4", "--emit", "csv",
    ]
)

# extension fields: name the field by q, or spell out the coefficients
show(["quadricpoints", "count", "--q", "9", "--coeffs", "1,1,1", "--P", "1", "--emit", "csv"])

# identity suites return a nonzero exit code on any failed instance
show(["quadricpoints", "verify", "phis", "--p", "5", "--emit", "csv"])

# refusing an oversized enumeration is an explicit exit code, not a hang
show(
    [
        "quadricpoints", "count", "--p", "3", "--coeffs", "1,1,1,1,1,1",
        "--P", "3", "--method", "brute", "--budget", "1000",
    ]
)
