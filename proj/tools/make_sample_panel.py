#!/usr/bin/env python3
"""Writes data/sample_panel.csv: a synthetic 19-entity, 1970-2011 panel of
GDP-per-capita-like series. Every value is generated here; the file is
released to the public domain. It is not real economic data."""

import math
import random
import sys

CODES = ["AU", "AT", "BE", "CA", "DN", "FR", "DE", "GB", "GR", "NL",
         "IT", "IR", "JP", "LU", "PL", "PT", "SE", "SW", "US"]
YEARS = range(1970, 2012)


def main(path):
    rng = random.Random(20111970)
    common = [rng.gauss(0.0, 0.02) for _ in YEARS]
    columns = []
    for k, code in enumerate(CODES):
        level = 2000.0 + 350.0 * k + rng.uniform(0, 400)
        growth = 0.045 + 0.03 * rng.random()
        beta = 0.5 + rng.random()
        series = []
        for t, _ in enumerate(YEARS):
            shock = beta * common[t] + rng.gauss(0.0, 0.025)
            # a few entities get a late catch-up or slowdown phase
            if code in ("IR", "LU") and t > 25:
                shock += 0.03
            if code in ("GR", "PT", "IT") and t > 36:
                shock -= 0.04
            level *= math.exp(growth + shock)
            series.append(level)
        columns.append(series)
    with open(path, "w", newline="\n") as out:
        out.write("period," + ",".join(CODES) + "\n")
        for t, year in enumerate(YEARS):
            out.write(str(year) + "," + ",".join(f"{col[t]:.2f}" for col in columns) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/sample_panel.csv")
