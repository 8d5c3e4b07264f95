#!/usr/bin/env python3
"""Build data/links_sample.tsv from the HT_links table of snappy_manifolds.

The HT_links DT column is alphabetic: crossings, components, one length per
component, then one letter per even label (lowercase positive, uppercase
negative, a=2). Any '.bits' suffix records planar flips and is dropped.

usage: make_sample_table.py more_manifolds.sqlite [out.tsv]
"""

import random
import sqlite3
import sys

REQUIRED = ["L10n35", "L9a55", "L11a496"]
SMALL_MAX_CROSSINGS = 7
SAMPLE_RANGE = (8, 11)
TOTAL = 100
SEED = 20240611

# Bridge number lower bounds beyond the component count.
BRIDGE_LOWER = {"L10n35": 4}


def letter_value(ch):
    v = 2 * (ord(ch.lower()) - ord("a") + 1)
    return v if ch.islower() else -v


def decode(dt):
    body = dt.split(".")[0]
    n_comp = ord(body[1]) - ord("a") + 1
    lengths = [ord(ch) - ord("a") + 1 for ch in body[2 : 2 + n_comp]]
    labels = [letter_value(ch) for ch in body[2 + n_comp :]]
    n = ord(body[0]) - ord("a") + 1
    if len(labels) != n or sum(lengths) != n:
        raise ValueError("inconsistent DT code " + dt)
    return lengths, labels


def crossings(name):
    digits = ""
    for ch in name[1:]:
        if not ch.isdigit():
            break
        digits += ch
    return int(digits)


def row(name, cusps, dt):
    lengths, labels = decode(dt)
    code = "lengths: " + " ".join(map(str, lengths)) + "; " + " ".join(map(str, labels))
    bridge = BRIDGE_LOWER.get(name, max(2, cusps))
    return f"{name}\tdt\t{code}\t1\t{bridge}"


def main():
    db = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else "data/links_sample.tsv"
    con = sqlite3.connect(db)
    links = con.execute("select name, cusps, DT from HT_links order by id").fetchall()
    by_name = {name: (name, cusps, dt) for name, cusps, dt in links}

    chosen = [by_name[n] for n in REQUIRED]
    small = [l for l in links if crossings(l[0]) <= SMALL_MAX_CROSSINGS]
    chosen += [l for l in small if l[0] not in REQUIRED]
    pool = [l for l in links
            if SAMPLE_RANGE[0] <= crossings(l[0]) <= SAMPLE_RANGE[1] and l[0] not in REQUIRED]
    rng = random.Random(SEED)
    chosen += sorted(rng.sample(pool, TOTAL - len(chosen)), key=lambda l: (crossings(l[0]), l[0]))

    with open(out, "w") as f:
        f.write("# name\tformat\tcode\tis_prime\tbridge_lower\n")
        f.write("# DT codes from the Hoste-Thistlethwaite table (snappy_manifolds HT_links).\n")
        f.write("# bridge_lower is the component count (at least 2) unless a stronger bound is known.\n")
        for name, cusps, dt in chosen:
            f.write(row(name, cusps, dt) + "\n")


if __name__ == "__main__":
    main()
