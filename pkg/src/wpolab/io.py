"""Poset file formats: JSON round-tripping and DOT (Hasse diagram) export.

A poset file is a single JSON object {"n": int, "le": [[i, j], ...]} with
optional "realizer" and "meta" fields, which are preserved verbatim.  The
loader closes `le` transitively and rejects antisymmetry violations with a
cycle witness.
"""

from __future__ import annotations

import json

from .posets import FinPoset, PosetError, make_poset


def _cycle_witness(n: int, pairs) -> list | None:
    """A vertex cycle in the strict-pair digraph, if one exists."""
    adj = {i: [] for i in range(n)}
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            continue  # out-of-range pairs are reported by make_poset itself
        if i == j:
            return [i, i]
        adj[i].append(j)
    state = {}  # 0 = on stack, 1 = done
    for start in range(n):
        if start in state:
            continue
        stack = [(start, iter(adj[start]))]
        path = [start]
        state[start] = 0
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                path.pop()
                state[v] = 1
            elif nxt not in state:
                state[nxt] = 0
                stack.append((nxt, iter(adj[nxt])))
                path.append(nxt)
            elif state[nxt] == 0:
                return path[path.index(nxt):] + [nxt]
    return None


def load_poset(source) -> FinPoset:
    """Parse a poset file (a JSON text, dict, or readable file object)."""
    if hasattr(source, "read"):
        source = source.read()
    data = json.loads(source) if isinstance(source, (str, bytes)) else source
    if not isinstance(data, dict) or "n" not in data or "le" not in data:
        raise PosetError('poset file must be an object with "n" and "le"')
    n, pairs = data["n"], [tuple(p) for p in data["le"]]
    try:
        return make_poset(n, pairs)
    except PosetError:
        witness = _cycle_witness(n, pairs)
        if witness is not None:
            raise PosetError(
                "le is not antisymmetric; cycle witness %s" % (witness,)
            ) from None
        raise


def export_poset(p: FinPoset, fmt: str = "json", meta=None) -> str:
    if fmt == "json":
        doc = {"n": p.n, "le": sorted(map(list, p.le))}
        if meta is not None:
            doc["meta"] = meta
        return json.dumps(doc, sort_keys=True)
    if fmt == "dot":
        lines = ["digraph poset {"]
        for v in range(p.n):
            lines.append("  %d;" % v)
        for i, j in sorted(p.hasse):
            lines.append("  %d -> %d;" % (i, j))
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError("unknown format %r (expected json or dot)" % fmt)
