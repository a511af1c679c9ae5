"""JSON and DOT renderings, plus matplotlib figures written to files."""
from __future__ import annotations

import json
from collections import defaultdict
from pathlib import Path

from .envlattice import CrossSectionLattice, type_map

SCHEMA = "envlat/1"


def envelope(kind: str, payload: dict) -> dict:
    return {"schema": SCHEMA, "kind": kind, **payload}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def element_record(L: CrossSectionLattice, k: int) -> dict:
    e = L.elements[k]
    tm = type_map(L.diagram, e)
    return {
        "I": list(e.I),
        "J": list(e.J),
        "rank": L.rank(e),
        "lambda_lower": list(tm.lambda_star_lower),
        "lambda_upper": list(tm.lambda_star_upper),
        "covers": list(L.upper_covers[k]),
    }


def lattice_json(L: CrossSectionLattice) -> dict:
    return envelope("lattice", {
        "diagram": L.diagram.name,
        "size": len(L),
        "height": L.height,
        "elements": [element_record(L, k) for k in range(len(L))],
    })


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def lattice_dot(L: CrossSectionLattice) -> str:
    """Hasse diagram, one node per idempotent, edges from lower to upper cover."""
    lines = [f'digraph "{L.diagram.name}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    layers = defaultdict(list)
    for k, e in enumerate(L.elements):
        lines.append(f'  n{k} [label="{_dot_escape(e.label())}"];')
        layers[L.rank(e)].append(k)
    for r in sorted(layers):
        lines.append("  { rank=same; " + " ".join(f"n{k};" for k in layers[r]) + " }")
    for lo, hi in L.hasse():
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_dot(name: str, labels: list[str], edges: list[tuple[int, int]]) -> str:
    lines = [f'digraph "{_dot_escape(name)}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for k, text in enumerate(labels):
        lines.append(f'  n{k} [label="{_dot_escape(text)}"];')
    for lo, hi in edges:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def plot_hasse(L: CrossSectionLattice, path: str | Path) -> Path:
    """Draw the Hasse diagram layered by rank and save it to ``path``."""
    plt = _pyplot()
    layers = defaultdict(list)
    for k, e in enumerate(L.elements):
        layers[L.rank(e)].append(k)
    pos = {}
    for r, ks in layers.items():
        for j, k in enumerate(ks):
            pos[k] = (j - (len(ks) - 1) / 2, r)
    width = max(len(ks) for ks in layers.values())
    fig, ax = plt.subplots(figsize=(max(4.0, 1.4 * width), 1.2 * (L.height + 1)))
    for lo, hi in L.hasse():
        (x0, y0), (x1, y1) = pos[lo], pos[hi]
        ax.plot([x0, x1], [y0, y1], color="0.55", lw=0.8, zorder=1)
    fontsize = 9 if len(L) <= 60 else 5
    for k, (x, y) in pos.items():
        ax.text(x, y, L.elements[k].label(), ha="center", va="center", fontsize=fontsize,
                bbox=dict(boxstyle="round,pad=0.2", fc="white", ec="0.3", lw=0.5), zorder=2)
    ax.set_title(f"Cross-section lattice, {L.diagram.name} ({len(L)} elements)")
    ax.set_ylabel("rank")
    ax.set_xticks([])
    ax.set_yticks(range(L.height + 1))
    for side in ("top", "right", "bottom"):
        ax.spines[side].set_visible(False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_counts(rows: list[dict], path: str | Path) -> Path:
    """Semi-log plot of ``d_n`` and ``e_n`` against ``n``."""
    plt = _pyplot()
    ns = [r["n"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ns, [r["d"] for r in rows], "o-", label="d_n")
    ax.semilogy([n for n in ns if n], [r["e"] for r in rows if r["n"]], "s--", label="e_n")
    ax.set_xlabel("n  (diagram A_n)")
    ax.set_ylabel("count")
    ax.set_title("G x G-orbit counts of Env(SL_{n+1})")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
