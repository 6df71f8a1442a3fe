"""Plain-text tables for traces, with inserted letters shown as ``[x]``."""
from __future__ import annotations

from .bijection import ShuffleDecomposition
from .insertion import CanonicalLabeling, insert_at, mis
from .perm import Permutation, des, maj

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def marked(perm, letters) -> str:
    letters = set(letters)
    return " ".join(f"[{x}]" if x in letters else str(x) for x in perm)


def table(header, rows) -> str:
    rows = [[str(c) for c in row] for row in rows]
    widths = [max(len(r[j]) for r in [header] + rows) for j in range(len(header))]

    def line(cells):
        first = cells[0].rjust(widths[0])
        rest = "  ".join(c.ljust(w) for c, w in zip(cells[1:], widths[1:]))
        return f"{first} | {rest}".rstrip()

    out = [line(header), "-" * len(line(header))]
    out.extend(line(r) for r in rows)
    return "\n".join(out)


def phi_table(dec: ShuffleDecomposition) -> str:
    """Rows ``i = n .. 0`` of the removal chain with d_i, the maj drop, t(i) and the des drop."""
    n = len(dec.pi)
    rows = []
    for i in range(n, -1, -1):
        shown = marked(dec.chain[i], dec.pi[i:])
        if i == 0:
            rows.append([i, shown, "", "", "", ""])
            continue
        drop = maj(dec.chain[i - 1]) - maj(dec.chain[i])
        rows.append([i, shown, dec.tail_descents[i - 1], drop, dec.t_values[i - 1], int(dec.descent_drop_flags[i - 1])])
    return table(["i", "alpha^(i)", "d_i(pi)", "maj drop", "t(i)", "des drop"], rows)


def mis_table(sigma, r: int) -> str:
    sigma = Permutation(sigma)
    base_des = des(sigma)
    rows = []
    for i, inc in enumerate(mis(sigma, r)):
        grown = insert_at(sigma, i, r)
        rows.append([i, marked(grown, [r]), maj(grown), inc, des(grown) - base_des])
    return table(["i", f"sigma^(i)({r})", "maj", "im", "des change"], rows)


def psi_table(steps, sigma, pi) -> str:
    """Rows ``i = n .. 0``: letter, T^(i) up to the last admissible space, M^(i), k_i, alpha^(i)."""
    pi = Permutation(pi)
    rows = []
    for st in steps:
        cells = [f"[{v}]" if j == st.position - 1 else str(v) for j, v in enumerate(st.t_seq)]
        if len(st.t_seq) < st.full_mis_len:
            cells.append("...")
        seq = "(" + ", ".join(cells) + ")"
        multiset = "{" + ", ".join(str(v) for v in st.multiset) + "}"
        rows.append([st.i, st.letter, seq, multiset, st.position, marked(st.before, pi[st.i:])])
    final = steps[-1].after if steps else Permutation(sigma)
    rows.append([0, "", "", "{}", "", marked(final, pi)])
    return table(["i", "pi_i", "T^(i)", "M^(i)", "k_i", "alpha^(i)"], rows)


def labeling_line(sigma, lab: CanonicalLabeling) -> str:
    """Labels as subscripts in front of each letter, the last one after the final letter."""
    sigma = Permutation(sigma)
    parts = [str(lab.labels[i]).translate(_SUB) + str(x) for i, x in enumerate(sigma)]
    parts.append(str(lab.labels[len(sigma)]).translate(_SUB))
    return " ".join(parts)
