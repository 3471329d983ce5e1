#!/usr/bin/env python3
"""Nilpotent orbit tables: characteristic vectors, JM parabolics and the even ones.

For classical types the Bala-Carter enumeration is compared against the
partition description (sl_n, so_{2n+1}, sp_{2n}) and any disagreement is reported.
"""
import argparse
from dataclasses import dataclass

from hodge_sl2.nilpotent_orbits import (enumerate_char_vectors, even_jm_classes,
                                        jm_parabolic_classes, partition_char_vector, partitions)
from hodge_sl2.root_system import build_root_system


@dataclass
class OrbitConfig:
    types: tuple = ("A3", "B2", "G2", "B3", "C3", "B4", "C4", "D4", "F4")
    verbose: bool = False


def partition_vectors(t):
    """Characteristic vectors from partitions, or None when no dictionary is implemented."""
    f, n = t[0], int(t[1:])
    if f == "A":
        return {partition_char_vector(d) for d in partitions(n + 1)}
    if f not in "BC":
        return None
    N, bad = (2 * n + 1, 0) if f == "B" else (2 * n, 1)
    out = set()
    for d in partitions(N):
        if any(d.count(k) % 2 for k in set(d) if k % 2 == bad):
            continue
        h = sorted((x for k in d for x in range(k - 1, -k, -2)), reverse=True)[:n]
        v = [h[i] - h[i + 1] for i in range(n - 1)] + [h[-1] if f == "B" else 2 * h[-1]]
        out.add(tuple(v))
    return out


def fmt(s):
    return "{" + ",".join(map(str, sorted(s))) + "}"


def main(cfg):
    for t in cfg.types:
        rs = build_root_system(t)
        vecs = enumerate_char_vectors(rs)
        jm = jm_parabolic_classes(rs, vecs)
        even = even_jm_classes(rs, vecs)
        check = partition_vectors(t)
        status = "" if check is None else ("  partitions: agree" if check == vecs
                                           else "  partitions: DISAGREE")
        print(f"{t}: {len(vecs)} orbits, {len(jm)} JM classes, {len(even)} even{status}")
        print("  even JM:", " ".join(fmt(s) for s in sorted(even, key=lambda s: (-len(s), sorted(s)))))
        if cfg.verbose:
            for v in sorted(vecs, reverse=True):
                print("   ", v)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("types", nargs="*")
    ap.add_argument("-v", "--verbose", action="store_true")
    a = ap.parse_args()
    cfg = OrbitConfig(verbose=a.verbose)
    if a.types:
        cfg.types = tuple(a.types)
    main(cfg)
