"""Standard report figures, rendered to files next to their CSV data.

Four panels cover the package's main results: figurate-number growth and
its power-law diagnostic, the exact 6j against its large-spin estimate,
and the Fisher zeros of random Euclidean tetrahedra in the complex
coupling plane.
"""

from __future__ import annotations

import csv
import math
import random
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import asymptotics as asym  # noqa: E402
from . import geometry as geo  # noqa: E402
from . import sampling  # noqa: E402
from .recoupling import figurate, sixj  # noqa: E402


def _write_csv(path: Path, header, rows):
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def render_figurate_growth(outdir: Path, q: int = 11, pmax: int = 100):
    rows = []
    for p in range(1, pmax + 1):
        value = figurate(p, q).value
        log_t = math.log(value) if value > 0 else float("nan")
        ratio = log_t / math.log(p) if p > 1 else float("nan")
        rows.append([p, value, log_t, ratio])
    csv_path = outdir / f"figurate_q{q}.csv"
    _write_csv(csv_path, ["p", "T", "ln_T", "ln_T_over_ln_p"], rows)

    fig, axes = plt.subplots(1, 2, figsize=(9, 3.5))
    ps = [r[0] for r in rows]
    axes[0].plot(ps, [r[2] for r in rows], lw=1.2)
    axes[0].set_xlabel("p")
    axes[0].set_ylabel(f"ln T(p, {q})")
    axes[0].set_title("logarithmic growth")
    ps_tail = [p for p in ps if p >= 20]
    axes[1].plot(ps_tail, [rows[p - 1][3] for p in ps_tail], lw=1.2)
    axes[1].axhline(q, color="k", ls="--", lw=0.8)
    axes[1].set_xlabel("p")
    axes[1].set_ylabel(f"ln T / ln p")
    axes[1].set_title(f"ratio approaches {q} from below")
    fig.tight_layout()
    png_path = outdir / f"figurate_q{q}.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [str(csv_path), str(png_path)]


def render_asymptotics(outdir: Path, jmin: int = 5, jmax: int = 40):
    rows = []
    for j in range(jmin, jmax + 1):
        t = (2 * j,) * 6
        exact = sixj(t)
        est = asym.pr_estimate(t)
        env = asym.pr_envelope(t)
        rows.append([j, exact, est, abs(est - exact), abs(est - exact) / env])
    csv_path = outdir / "pr_asymptotics.csv"
    _write_csv(csv_path, ["j", "exact", "estimate", "abs_err", "rel_envelope_err"], rows)

    fig, axes = plt.subplots(1, 2, figsize=(9, 3.5))
    js = [r[0] for r in rows]
    axes[0].plot(js, [r[1] for r in rows], "o", ms=3, label="exact 6j")
    axes[0].plot(js, [r[2] for r in rows], lw=1.0, label="estimate")
    axes[0].set_xlabel("j (equilateral spins)")
    axes[0].legend(fontsize=8)
    axes[0].set_title("6j versus large-spin estimate")
    axes[1].semilogy(js, [r[4] for r in rows], lw=1.2)
    axes[1].set_xlabel("j")
    axes[1].set_ylabel("error / envelope")
    axes[1].set_title("relative envelope error")
    fig.tight_layout()
    png_path = outdir / "pr_asymptotics.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [str(csv_path), str(png_path)]


def render_fisher_zeros(outdir: Path, samples: int = 60, seed: int = 0):
    rng = random.Random(seed)
    rows = []
    points = {1: [], -1: []}
    for _ in range(samples):
        t = sampling.euclidean_tetra(rng)
        for eps in (1, -1):
            z = geo.geometric_zeros(t, eps)
            residual = geo.verify_zero(z)
            for e in range(1, 7):
                y = z.couplings[e]
                points[eps].append(y)
                rows.append([*t.l, eps, e, y.real, y.imag, residual])
    csv_path = outdir / "fisher_zeros.csv"
    _write_csv(
        csv_path,
        ["l1", "l2", "l3", "l4", "l5", "l6", "eps", "edge", "re_Y", "im_Y", "residual"],
        rows,
    )

    fig, ax = plt.subplots(figsize=(5, 4.5))
    for eps, color in ((1, "tab:blue"), (-1, "tab:orange")):
        ax.plot(
            [y.real for y in points[eps]],
            [y.imag for y in points[eps]],
            ".", ms=2.5, color=color, label=f"eps = {eps:+d}",
        )
    equilateral = complex(1 / 3, math.sqrt(2) / 3)
    ax.plot([equilateral.real, equilateral.real],
            [equilateral.imag, -equilateral.imag], "k*", ms=10,
            label="equilateral")
    ax.set_xlabel("Re Y")
    ax.set_ylabel("Im Y")
    ax.set_title("geometric Fisher zeros, random tetrahedra")
    ax.legend(fontsize=8)
    fig.tight_layout()
    png_path = outdir / "fisher_zeros.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [str(csv_path), str(png_path)]


def render_all(outdir: str, seed: int = 0, jmax: int = 40):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    paths += render_figurate_growth(out)
    paths += render_asymptotics(out, jmax=jmax)
    paths += render_fisher_zeros(out, seed=seed)
    return paths
