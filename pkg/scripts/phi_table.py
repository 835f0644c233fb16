"""Emit the inverse-degree coefficient table as CSV.

Rows are one polynomial per d: the counts phi(n, d) as a polynomial in
n, coefficients ascending, rationals as p/q.  Degrees grow with d, so
rows are padded with zeros to a fixed width.
"""

import argparse
import dataclasses
import sys
import time
from fractions import Fraction

from mldeg.poly_n import phi_poly


@dataclasses.dataclass
class TableConfig:
    matrix_type: str = "sym"
    dmax: int = 8
    out: str = "-"


def render(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def build_rows(config):
    header = "d," + ",".join(f"coeff_{k}" for k in range(config.dmax))
    rows = [header]
    for d in range(1, config.dmax + 1):
        started = time.monotonic()
        poly = phi_poly(config.matrix_type, d)
        cells = [render(c) for c in poly.coeffs]
        cells += ["0"] * (config.dmax - len(cells))
        rows.append(str(d) + "," + ",".join(cells))
        print(f"d={d} degree {poly.degree} fitted in "
              f"{time.monotonic() - started:.2f}s", file=sys.stderr)
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--type", default="sym", dest="matrix_type")
    parser.add_argument("--dmax", type=int, default=8)
    parser.add_argument("--out", default="-", help="output path, '-' for stdout")
    args = parser.parse_args()
    config = TableConfig(matrix_type=args.matrix_type, dmax=args.dmax,
                         out=args.out)

    rows = build_rows(config)
    if config.out == "-":
        for row in rows:
            print(row)
    else:
        with open(config.out, "w") as handle:
            handle.write("\n".join(rows) + "\n")
        print(f"wrote {len(rows) - 1} rows to {config.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
