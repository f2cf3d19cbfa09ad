"""Report rendering: delimited tables plus matplotlib figures on disk.

The report path is presentation only; every number it draws is computed by
the exact library first and also written verbatim (as fraction strings) to
TSV next to the figures, so the plots never become the source of truth.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .invertible import check_invertible, decompose_atomic, parse_polynomial, weights
from .milnor import milnor_basis
from .periods import cubic_flat_coordinate, quintic_mirror_map
from .state_space import localize, sector_report
from .symmetry import max_symmetry_group, subgroup


def write_sector_tsv(rows: list[dict], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("twist\tfixed_dim\trestricted_mu\tinvariant_count\tparity\tdegrees\n")
        for r in rows:
            fh.write(
                "{}\t{}\t{}\t{}\t{}\t{}\n".format(
                    ",".join(r["twist"]),
                    r["fixed_dim"],
                    r["restricted_mu"],
                    r["invariant_count"],
                    r["parity"],
                    ",".join(r["degrees"]),
                )
            )


def write_degree_tsv(degree_counts: list[tuple[Fraction, int]], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("degree\tcount\n")
        for deg, count in degree_counts:
            fh.write(f"{deg}\t{count}\n")


def write_series_tsv(columns: dict[str, list[str]], path: str) -> None:
    names = list(columns)
    length = max(len(v) for v in columns.values())
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("exponent\t" + "\t".join(names) + "\n")
        for k in range(length):
            row = [str(k)]
            for name in names:
                vals = columns[name]
                row.append(vals[k] if k < len(vals) else "")
            fh.write("\t".join(row) + "\n")


def degree_spectrum_figure(degree_counts, path: str, title: str) -> None:
    degrees = [float(d) for d, _ in degree_counts]
    counts = [c for _, c in degree_counts]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(degrees, counts, width=0.12, color="#31688e")
    ax.set_xlabel("degree of basis class")
    ax.set_ylabel("dimension")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def sector_figure(rows, path: str, title: str) -> None:
    counts = [r["invariant_count"] for r in rows]
    colors = ["#b5de2b" if r["parity"] == "even" else "#31688e" for r in rows]
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar(range(len(counts)), counts, color=colors)
    ax.set_xlabel("sector (sorted by twist)")
    ax.set_ylabel("invariant classes")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def series_figure(columns: dict[str, list[str]], path: str, title: str) -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    for name, values in columns.items():
        xs = [k for k, v in enumerate(values) if v not in ("", "0")]
        ys = [abs(float(Fraction(values[k]))) for k in xs]
        ax.plot(xs, ys, marker="o", linestyle="-", label=name)
    ax.set_yscale("log")
    ax.set_xlabel("exponent")
    ax.set_ylabel("|coefficient| (float rendering of exact value)")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def run_report(args) -> dict:
    """Write tables, figures and a JSON summary; returns the written paths."""
    from .cli import parse_group_argument  # local import to avoid a cycle

    os.makedirs(args.outdir, exist_ok=True)
    written: list[str] = []
    poly = parse_polynomial(args.polynomial)
    e = check_invertible(poly)
    w = weights(e)
    basis = milnor_basis(decompose_atomic(e), w)
    degree_counts = sorted(Counter(basis.degrees()).items(), reverse=True)

    path = os.path.join(args.outdir, "milnor_degrees.tsv")
    write_degree_tsv(degree_counts, path)
    written.append(path)
    path = os.path.join(args.outdir, "degree_spectrum.png")
    degree_spectrum_figure(
        degree_counts, path, f"degree spectrum, mu = {len(basis)}"
    )
    written.append(path)

    summary = {
        "polynomial": poly.text(),
        "milnor_number": len(basis),
        "central_charge": str(w.central_charge),
    }

    if args.group:
        ambient = max_symmetry_group(e)
        group = subgroup(parse_group_argument(args.group, args.mod), ambient)
        space = localize(poly, group)
        rows = sector_report(space)
        path = os.path.join(args.outdir, "sectors.tsv")
        write_sector_tsv(rows, path)
        written.append(path)
        path = os.path.join(args.outdir, "sector_dimensions.png")
        sector_figure(
            rows,
            path,
            f"sectors of |G| = {group.order}: odd {space.odd_dim}, even {space.even_dim}",
        )
        written.append(path)
        summary["odd_dim"] = space.odd_dim
        summary["even_dim"] = space.even_dim

    if args.model == "cubic":
        flat = cubic_flat_coordinate(args.order)
        columns = {
            "g": flat.g.as_strings(),
            "h": flat.h.as_strings(),
            "tau": flat.tau.as_strings(),
        }
    elif args.model == "quintic":
        tau, psi_of_tau = quintic_mirror_map(args.order)
        columns = {"tau": tau.as_strings(), "psi_of_tau": psi_of_tau.as_strings()}
    else:
        columns = None
    if columns is not None:
        path = os.path.join(args.outdir, "series.tsv")
        write_series_tsv(columns, path)
        written.append(path)
        path = os.path.join(args.outdir, "series_coefficients.png")
        series_figure(columns, path, f"{args.model} flat-coordinate series")
        written.append(path)

    path = os.path.join(args.outdir, "summary.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(summary, fh, sort_keys=True, indent=2)
    written.append(path)
    return {"written": written, "summary": summary}
