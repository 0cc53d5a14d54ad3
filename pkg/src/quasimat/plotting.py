"""Figure rendering for the CLI report paths (file output only)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def _finish(fig, path):
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def save_spectrum_figure(reports, path):
    """Bar chart of Laplacian eigenvalues per chain dimension."""
    fig, axes = plt.subplots(
        1, max(len(reports), 1), figsize=(4 * max(len(reports), 1), 3)
    )
    if len(reports) <= 1:
        axes = [axes]
    for ax, report in zip(axes, reports):
        values = sorted(report.eigenvalues)
        ax.bar(range(len(values)), values, color="steelblue")
        ax.set_title(
            f"dim {report.dimension} ({'integral' if report.integral else 'non-integral'})"
        )
        ax.set_xlabel("index")
        ax.set_ylabel("eigenvalue")
    return _finish(fig, path)


def save_poset_figure(poset, path):
    """Hasse diagram with elements placed by height layer."""
    heights = {}

    def height(e):
        if e not in heights:
            below = [
                o
                for o in poset.elements
                if o != e and poset.leq(o, e) and not poset.leq(e, o)
            ]
            heights[e] = 1 + max((height(o) for o in below), default=-1)
        return heights[e]

    for e in poset.elements:
        height(e)
    # simple layered layout: x position by order within each layer
    layers = {}
    for e, h in heights.items():
        layers.setdefault(h, []).append(e)
    pos = {}
    for h, members in layers.items():
        members.sort(key=lambda e: sorted(e) if isinstance(e, frozenset) else e)
        for i, e in enumerate(members):
            pos[e] = (i - len(members) / 2, h)
    fig, ax = plt.subplots(figsize=(6, 4))
    for a, b in poset.covers():
        ax.plot(
            [pos[a][0], pos[b][0]], [pos[a][1], pos[b][1]], "k-", lw=0.8, zorder=1
        )
    for e, (x, y) in pos.items():
        label = "".join(map(str, sorted(e))) if isinstance(e, frozenset) else str(e)
        ax.text(
            x, y, label, ha="center", va="center", zorder=2,
            bbox=dict(boxstyle="round", fc="lightyellow", ec="gray"),
        )
    ax.set_axis_off()
    return _finish(fig, path)


def save_sweep_figure(counts, path):
    """Pass/fail bar chart per property of a sweep run."""
    names = sorted(counts)
    passed = [counts[n]["passed"] for n in names]
    failed = [counts[n]["failed"] for n in names]
    fig, ax = plt.subplots(figsize=(max(4, len(names) * 1.5), 3))
    ax.bar(names, passed, label="passed", color="seagreen")
    ax.bar(names, failed, bottom=passed, label="failed", color="firebrick")
    ax.set_ylabel("instances")
    ax.legend()
    fig.autofmt_xdate(rotation=30)
    return _finish(fig, path)
