#!/usr/bin/env python3
"""Regenerate tests/fixtures/stat_reference.json.

Reference values for the paired t-test, Holm adjustment, and Student-t CDF
come from scipy/statsmodels. Run once and commit the output; the C++ tests
compare against the frozen file, not against a live scipy install.
"""

import json
import pathlib

import numpy as np
from scipy import stats
from statsmodels.stats.multitest import multipletests

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "stat_reference.json"

rng = np.random.default_rng(20240817)

paired = []
for _ in range(20):
    n = int(rng.integers(5, 51))
    baseline = rng.normal(0.5, 0.2, n)
    treatment = baseline - rng.normal(0.05, 0.15, n)
    diffs = baseline - treatment
    t, p = stats.ttest_rel(baseline, treatment)
    d = float(np.mean(diffs) / np.std(diffs, ddof=1))
    paired.append(
        {
            "baseline": [float(x) for x in baseline],
            "treatment": [float(x) for x in treatment],
            "t": float(t),
            "p": float(p),
            "d": d,
        }
    )

holm = []
for _ in range(20):
    k = int(rng.integers(1, 9))
    p = rng.uniform(0.0, 1.0, k)
    adjusted = multipletests(p, method="holm")[1]
    holm.append({"p": [float(x) for x in p], "adjusted": [float(x) for x in adjusted]})

cdf_points = [-17.0, -6.0, -3.0, -1.5, -0.5, 0.0, 0.5, 1.5, 3.0, 6.0, 17.0]
cdf = []
for df in (10, 799):
    cdf.append({"df": df, "t": cdf_points, "cdf": [float(stats.t.cdf(x, df)) for x in cdf_points]})

OUT.parent.mkdir(parents=True, exist_ok=True)
OUT.write_text(json.dumps({"paired_t": paired, "holm": holm, "t_cdf": cdf}, indent=1) + "\n")
print(f"wrote {OUT}")
