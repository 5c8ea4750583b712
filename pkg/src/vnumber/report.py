"""File reports: delimited output plus a rendered figure.

Power-sequence runs can be exported as a CSV table and a matplotlib plot of
v(I^n) against its linear bounds.
"""
from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .monomials import pure_power_exponents, alpha  # noqa: E402
from .powers import PowerSequence  # noqa: E402


def power_rows(seq: PowerSequence) -> list[dict]:
    """One row per computed power: value and the generic degree bounds."""
    rows = []
    for n, value, witness in seq.values:
        power = seq.ideal**n
        lower = alpha(power) - 1
        caps = pure_power_exponents(power)
        upper = sum(caps) - power.ambient if caps is not None else None
        rows.append(
            {"n": n, "v": value, "lower": lower, "upper": upper, "witness": witness}
        )
    return rows


def write_power_report(
    seq: PowerSequence, out_dir: str | Path, stem: str = "powers"
) -> tuple[Path, Path]:
    """Write <stem>.csv and <stem>.png into out_dir; returns both paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = power_rows(seq)

    csv_path = out / f"{stem}.csv"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "v", "lower", "upper"])
        for row in rows:
            writer.writerow(
                [row["n"], row["v"], row["lower"], "" if row["upper"] is None else row["upper"]]
            )

    png_path = out / f"{stem}.png"
    ns = [row["n"] for row in rows]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(ns, [row["v"] for row in rows], "o-", label="v(I^n)")
    ax.plot(ns, [row["lower"] for row in rows], "s--", label="alpha(I^n) - 1")
    if all(row["upper"] is not None for row in rows):
        ax.plot(ns, [row["upper"] for row in rows], "^--", label="sum a_i - t")
    ax.set_xlabel("n")
    ax.set_ylabel("v-number")
    ax.set_xticks(ns)
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return csv_path, png_path
