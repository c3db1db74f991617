#!/usr/bin/env python3
"""Independent brute-force oracle for the golden test data.

Recomputes, from nothing but the permutation generators in data/catalog.json,
the invariants that the C++ library must reproduce exactly:

  * group and Sylow subgroup orders, group exponent of S,
  * conjugacy classes of G and the fusion partition of S (G-classes
    intersected with S), in the canonical order (classes sorted by their
    lexicographically minimal member, identity class first),
  * fully centralised representatives per fusion class (maximal |C_S(x)|,
    ties broken by smaller element order, then by canonical element order),
  * the centralizer data Delta_K = |C_G(x_K)| and |C_S(x_K)| per class, and
    the products over all classes that pin down |det X|^2 and det C:
       det_abs_sq = prod_K |C_S(x_K)| = prod_K p-part|C_G(x_K)| = p^alpha
       det_cartan = prod_K p'-part|C_G(x_K)|
    (For the inner systems, where S = G, the first product is forced by
    column orthogonality of the character table of S, so it doubles as an
    independent determinant prediction.)

Everything is computed by direct enumeration with the standard library only;
no code is shared with the C++ implementation.  The output is frozen as
tests/golden/expected.json and compared against the library by the test
suite.  Regenerate with:

    python3 scripts/oracle.py            # writes tests/golden/expected.json
    python3 scripts/oracle.py --check    # regenerate and diff against frozen
"""

import argparse
import json
import math
import re
import sys
from functools import reduce
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


# ----------------------------------------------------------------------------
# permutations: tuples of 0-based images; canonical order = tuple order
# ----------------------------------------------------------------------------

def parse_cycles(text, degree):
    perm = list(range(degree))
    body = text.strip()
    if body in ("", "()"):
        return tuple(perm)
    chunks = re.findall(r"\(([^()]*)\)", body)
    if "".join("(%s)" % c for c in chunks).replace(" ", "") != body.replace(" ", ""):
        raise ValueError("bad cycle string: %r" % text)
    seen = set()
    for chunk in chunks:
        pts = [int(t) for t in chunk.replace(",", " ").split()]
        for a in pts:
            if not 1 <= a <= degree:
                raise ValueError("point %d out of range in %r" % (a, text))
            if a in seen:
                raise ValueError("repeated point %d in %r" % (a, text))
            seen.add(a)
        for i, a in enumerate(pts):
            perm[a - 1] = pts[(i + 1) % len(pts)] - 1
    return tuple(perm)


def compose(a, b):
    """(a o b)(x) = a(b(x)), matching the C++ operator*."""
    return tuple(a[b[i]] for i in range(len(a)))


def inverse(a):
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple(inv)


def perm_order(a):
    order = 1
    seen = [False] * len(a)
    for start in range(len(a)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            length += 1
        order = math.lcm(order, length)
    return order


def cycle_string(a):
    """Disjoint cycles, minimal point first per cycle, fixed points omitted."""
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start] or a[start] == start:
            seen[start] = True
            continue
        cyc, x = [], start
        while not seen[x]:
            seen[x] = True
            cyc.append(str(x + 1))
            x = a[x]
        out.append("(" + " ".join(cyc) + ")")
    return "".join(out) if out else "()"


def closure(gens, degree, cap=500000):
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
                    if len(elems) > cap:
                        raise RuntimeError("group order cap exceeded")
        frontier = new
    return sorted(elems)


def conjugacy_classes(elems, gens):
    """Classes as sorted element lists, ordered by minimal member."""
    inv_gens = [inverse(g) for g in gens]
    assigned = set()
    classes = []
    for x in elems:  # canonical order => classes come out by minimal member
        if x in assigned:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            new = []
            for y in frontier:
                for g, gi in zip(gens, inv_gens):
                    z = compose(compose(g, y), gi)
                    if z not in orbit:
                        orbit.add(z)
                        new.append(z)
            frontier = new
        classes.append(sorted(orbit))
        assigned |= orbit
    return classes


def p_part(n, p):
    pp = 1
    while n % p == 0:
        n //= p
        pp *= p
    return pp, n


def is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


# ----------------------------------------------------------------------------
# one system: G, S <= G, prime p
# ----------------------------------------------------------------------------

def analyze(name, g_gens, s_gens, degree, p, is_product):
    g_elems = closure(g_gens, degree)
    s_elems = closure(s_gens, degree)
    g_set = set(g_elems)
    assert all(x in g_set for x in s_elems), "%s: S not inside G" % name

    g_order, s_order = len(g_elems), len(s_elems)
    assert p_part(g_order, p)[0] == s_order, "%s: S is not Sylow" % name
    assert all(is_p_power(perm_order(x), p) for x in s_elems), "%s: S not a p-group" % name

    g_classes = conjugacy_classes(g_elems, g_gens)
    class_of = {}
    for k, cls in enumerate(g_classes):
        for x in cls:
            class_of[x] = k
    cg_order = {k: g_order // len(cls) for k, cls in enumerate(g_classes)}

    # fusion partition: scan S canonically, first-seen G-class opens a class
    fusion = []        # list of lists of S elements
    gclass_to_f = {}
    for x in s_elems:
        k = class_of[x]
        if k not in gclass_to_f:
            gclass_to_f[k] = len(fusion)
            fusion.append([])
        fusion[gclass_to_f[k]].append(x)

    p_element_g_classes = sum(1 for cls in g_classes if is_p_power(perm_order(cls[0]), p))
    assert len(fusion) == p_element_g_classes, (
        "%s: fusion class count != p-element G-class count" % name)

    # fully centralised representatives and the centralizer products
    reps, cs_list, delta = [], [], []
    for members in fusion:
        best, best_cs, best_ord = None, -1, None
        for x in members:  # canonical order resolves the final tie
            cs = sum(1 for s in s_elems if compose(s, x) == compose(x, s))
            ordx = perm_order(x)
            if cs > best_cs or (cs == best_cs and ordx < best_ord):
                best, best_cs, best_ord = x, cs, ordx
        reps.append(best)
        cs_list.append(best_cs)
        delta.append(cg_order[class_of[best]])
        assert best_cs == p_part(cg_order[class_of[best]], p)[0], (
            "%s: |C_S(rep)| != p-part |C_G(rep)| at a fully centralised rep" % name)

    assert reps[0] == tuple(range(degree)), "%s: identity class is not first" % name

    prod_cs = math.prod(cs_list)
    prod_p_part_cg = math.prod(p_part(d, p)[0] for d in delta)
    prod_p_prime_cg = math.prod(p_part(d, p)[1] for d in delta)
    assert prod_cs == prod_p_part_cg, "%s: centralizer product mismatch" % name
    assert is_p_power(prod_cs, p), "%s: det prediction is not a p-power" % name
    alpha = 0
    n = prod_cs
    while n > 1:
        n //= p
        alpha += 1

    entry = {
        "p": p,
        "degree": degree,
        "group_order": g_order,
        "sylow_order": s_order,
        "exponent_s": reduce(math.lcm, (perm_order(x) for x in s_elems), 1),
        "g_class_count": len(g_classes),
        "p_element_g_class_count": p_element_g_classes,
        "class_count": len(fusion),
        "transitive": len(fusion) == 2,
        "rep_orders": [perm_order(x) for x in reps],
        "delta": delta,
        "cs": cs_list,
        "cg_p_prime_parts": [p_part(d, p)[1] for d in delta],
        "det_abs_sq": prod_cs,
        "alpha": alpha,
        "det_cartan": prod_p_prime_cg,
    }
    if not is_product:
        # product representatives are pairs of factor representatives in the
        # C++ library; only direct entries pin the exact element
        entry["rep_cycles"] = [cycle_string(x) for x in reps]
    return entry


def shift(perm, offset, degree):
    img = list(range(degree))
    for i, v in enumerate(perm):
        img[i + offset] = v + offset
    return tuple(img)


def pad(perm, degree):
    return tuple(list(perm) + list(range(len(perm), degree)))


def resolve(cat, name, cache):
    """(g_gens, s_gens, degree, p) for an entry, products built recursively."""
    if name in cache:
        return cache[name]
    entry = next(e for e in cat if e["name"] == name)
    if "product" in entry.get("tags", []):
        lg, ls, ld, lp = resolve(cat, entry["factors"][0], cache)
        rg, rs, rd, rp = resolve(cat, entry["factors"][1], cache)
        assert lp == rp, "%s: factor primes differ" % name
        degree = ld + rd
        g_gens = [pad(x, degree) for x in lg] + [shift(x, ld, degree) for x in rg]
        s_gens = [pad(x, degree) for x in ls] + [shift(x, ld, degree) for x in rs]
        out = (g_gens, s_gens, degree, lp)
    else:
        degree, p = entry["degree"], entry["p"]
        g_gens = [parse_cycles(c, degree) for c in entry["group"]]
        s_gens = [parse_cycles(c, degree) for c in entry["sylow"]]
        out = (g_gens, s_gens, degree, p)
    cache[name] = out
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--catalog", default=str(REPO_ROOT / "data" / "catalog.json"))
    ap.add_argument("--out", default=str(REPO_ROOT / "tests" / "golden" / "expected.json"))
    ap.add_argument("--check", action="store_true",
                    help="do not write; diff against the frozen file instead")
    args = ap.parse_args()

    cat = json.loads(Path(args.catalog).read_text())["systems"]
    cache = {}
    systems = {}
    for entry in cat:
        name = entry["name"]
        g_gens, s_gens, degree, p = resolve(cat, name, cache)
        systems[name] = analyze(name, g_gens, s_gens, degree, p,
                                "product" in entry.get("tags", []))
        print("%-14s |G|=%-6d |S|=%-4d classes=%-2d det_abs_sq=%-6d det_cartan=%d"
              % (name, systems[name]["group_order"], systems[name]["sylow_order"],
                 systems[name]["class_count"], systems[name]["det_abs_sq"],
                 systems[name]["det_cartan"]))

    doc = {
        "catalog": {"entries": len(cat), "names": sorted(e["name"] for e in cat)},
        "systems": systems,
    }
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    out = Path(args.out)
    if args.check:
        if out.read_text() != text:
            print("MISMATCH against %s" % out, file=sys.stderr)
            return 1
        print("frozen golden file matches")
        return 0
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    print("wrote %s" % out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
