"""Running the built-in checks, as the command line does with `verify`."""
from domdodom.verify import verify_cover_bound, verify_ekr, verify_thm02, verify_tau

for report in (verify_ekr(7, 3), verify_cover_bound(7, 3), verify_tau(50)):
    print(("ok   " if report["passed"] else "FAIL ") + report["claim"])

# closed forms only hold for n large; small n is reported, not failed
for n, p, part in [(7, 0, 1), (8, 1, 1), (8, 0, 2)]:
    r = verify_thm02(n, 3, p, part)
    print(f"part {part} n={n} p={p}: exact {r['exact']}, formula {r['formula']}: {r['status']}")
