"""Verify the generalized binomial identity symbolically for a sweep of m.

Both sides are expanded into canonical sparse polynomials over exact
rationals in the ring (x, y, z); equality of the canonical forms is the
proof-by-computation for each fixed m.
"""

from binomid import lhs_identity, rhs_identity, verify_identity

print("Both sides at small m, fully expanded:")
for m in range(4):
    print(f"\nm = {m}")
    print("  lhs =", lhs_identity(m))
    print("  rhs =", rhs_identity(m))

print("\nSweep m = 0..12 with timing:")
for m in range(13):
    report = verify_identity(m)
    status = "OK " if report.equal else "FAIL"
    print(f"  m={m:2d}  {status}  {report.term_counts[0]:3d} terms  "
          f"{report.elapsed_micros:8d} us")
