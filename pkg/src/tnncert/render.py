"""Text and Graphviz DOT renderings of matrices and weight arrays."""

from __future__ import annotations

from typing import List

from .network import WeightArray


def _grid(cells: List[List[str]]) -> str:
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row).rstrip() for row in cells)


def matrix_text(matrix) -> str:
    return _grid([[str(x) for x in row] for row in matrix])


def array_text(array: WeightArray) -> str:
    """The compact triangular layout: row m lists weights [m,1] .. [m,m]."""
    return _grid([[str(x) for x in row] for row in array.rows])


def network_dot(array: WeightArray, name: str = "network") -> str:
    """DOT source for the staircase network.

    Sources s_0..s_n sit top to bottom on the left and sinks t_0..t_n on the
    right; vertical edges point up and carry the array weights, horizontal
    edges have weight 1 and are left unlabelled.
    """
    n = array.n
    out = [
        f"digraph {name} {{",
        "  rankdir=LR;",
        "  splines=false;",
        '  node [shape=point, width=0.06];',
    ]
    for r in range(n + 1):
        out.append(f'  s{r} [shape=plaintext, label="s{r}", pos="0,{-r}!"];')
        out.append(f'  t{r} [shape=plaintext, label="t{r}", pos="{n + 1},{-r}!"];')
        for c in range(1, min(n, r + 1) + 1):
            out.append(f'  v{r}_{c} [pos="{c},{-r}!"];')
    for r in range(n + 1):
        last = min(n, r + 1)
        chain = [f"s{r}"] + [f"v{r}_{c}" for c in range(1, last + 1)] + [f"t{r}"]
        out.append("  " + " -> ".join(chain) + ";")
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            out.append(f'  v{m}_{k} -> v{m - 1}_{k} [label="{array[m, k]}"];')
    out.append("}")
    return "\n".join(out) + "\n"
