"""Driving the seeded property suites programmatically.

The same engine sits behind `sl2tensor verify`; reports are plain dicts
and are reproducible for a fixed (seed, cases, degree) configuration.
A deliberate-fault switch shows what a failure report looks like.
"""

from sl2tensor import nilhecke as nh
from sl2tensor.suites import SUITE_NAMES, SuiteConfig, report_ok, run_suite

cfg = SuiteConfig(seed=42, cases=10, max_degree=3, degree_bound=6)

for name in SUITE_NAMES:
    report = run_suite(name, cfg)
    worst = max(p["cases"] for p in report["properties"])
    print(f"suite {name:10s}: {len(report['properties'])} properties, "
          f"up to {worst} cases each -> "
          f"{'all pass' if report_ok(report) else 'FAILURES'}")

# reports are deterministic: same config, same bytes
again = run_suite("nilhecke", cfg)
print("\nsame seed reproduces the report:", again == run_suite("nilhecke", cfg))

# flip one straightening term and watch the relations catch it
nh.DROP_STRAIGHTEN_UNIT = True
try:
    broken = run_suite("nilhecke", cfg)
finally:
    nh.DROP_STRAIGHTEN_UNIT = False

print("\nwith the dropped straightening unit:")
for p in broken["properties"]:
    if p["failed"]:
        print(f"  {p['id']}: {p['failed']} of {p['cases']} cases failed")
        print(f"    first counterexample: {p['first_counterexample']}")
print("restored engine is clean:", report_ok(run_suite("nilhecke", cfg)))
