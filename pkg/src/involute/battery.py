"""The verification battery: one runnable check per acceptance target.

Every check recomputes its expected values from an independent route
(brute force, explicit membership sets, arithmetic) and compares them with
the production path.  ``run_battery`` returns one result per check; the CLI
prints a pass/fail line for each and exits non-zero on any failure.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import permutations

from . import families
from .graphs import (
    complete_graph,
    cycle_graph,
    graph_automorphisms,
    graph_involution_group,
    frucht_semigroup,
    path_graph,
    rigid_tree,
    star_graph,
)
from .morphisms import (
    enumerate_anti_automorphisms,
    enumerate_automorphisms,
    find_isomorphism,
    involutions,
    is_proper_involution,
    order_two_automorphisms,
)
from .perms import Permutation, compose, invert
from .permgroups import (
    PermGroup,
    c_group,
    g_group,
    k_group,
    signed_aut_group,
    to_cayley_table,
    two_involution_factorization,
)
from .semigroups import FiniteSemigroup, validate
from .traces import TraceContext, bfs_trace_class, delta_map, gamma_map, normal_form, trace_equal


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    bound: float


def _run(name, bound, fn) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, not an abort
        return CheckResult(name, False, f"error: {exc!r}", time.perf_counter() - t0, bound)
    elapsed = time.perf_counter() - t0
    if ok and elapsed > bound:
        ok = False
        detail += f"; exceeded the {bound:.0f}s bound"
    return CheckResult(name, ok, detail, elapsed, bound)


def _z2_times_sym(n: int) -> FiniteSemigroup:
    return families.direct_product_table(
        families.cyclic_group(2), families.sym_group_table(n)
    )


def _aut_as_group(s: FiniteSemigroup, **kw) -> PermGroup:
    auts = enumerate_automorphisms(s, **kw).elements
    return PermGroup(s.n, auts, auts)


# --- the Klein four-group -------------------------------------------------

def _check_klein(opts):
    k = families.klein_four()
    auts = enumerate_automorphisms(k, budget=opts.budget)
    invs = involutions(k, budget=opts.budget)
    c = c_group(k, budget=opts.budget, cap=opts.order_cap)
    iso = find_isomorphism(to_cayley_table(c), families.sym_group_table(3))
    ok = len(auts) == 6 and len(invs) == 3 and c.order == 6 and iso is not None
    return ok, f"|Aut|={len(auts)} |I|={len(invs)} |C|={c.order} C~Sym(3)={iso is not None}"


# --- cyclic groups: C(Z_n) is an elementary abelian 2-group ----------------

def _check_zn_sweep(opts):
    failures = []
    for n in range(2, 201):
        zn = families.cyclic_group(n)
        r = families.r_of_n(n)
        # independent arithmetic oracle for the R(n) formula
        solutions = sum(1 for k in range(n) if (k * k) % n == 1)
        invs = involutions(zn, budget=opts.budget)
        c = c_group(zn, budget=opts.budget, cap=opts.order_cap)
        good = (
            solutions == 2**r
            and len(invs) == 2**r - 1
            and c.order == 2**r
            and all((p * p).is_identity() for p in c)
        )
        if not good:
            failures.append(n)
    return not failures, f"n=2..200, failures: {failures or 'none'}"


# --- symmetric groups: C = Z_2 x Sym(n) ------------------------------------

def _check_symmetric_groups(opts):
    parts = []
    ok = True
    for n in (3, 4, 5):
        s = families.sym_group_table(n)
        auts = enumerate_automorphisms(s, budget=opts.budget, jobs=opts.jobs)
        c = c_group(s, budget=opts.budget, cap=opts.order_cap)
        iso = find_isomorphism(to_cayley_table(c), _z2_times_sym(n))
        fact = len(s.table)
        good = len(auts) == fact and c.order == 2 * fact and iso is not None
        ok = ok and good
        parts.append(f"n={n}:|C|={c.order}{'' if good else '!'}")
    return ok, " ".join(parts)


def _check_sym6_stretch(opts):
    s = families.sym_group_table(6)
    auts = enumerate_automorphisms(s, budget=opts.budget, jobs=opts.jobs)
    return len(auts) == 1440, f"|Aut(Sym(6))|={len(auts)} (outer automorphism included)"


# --- full transformation monoids: no anti-automorphisms --------------------

def _t_laws(n, opts):
    s = families.full_transformation_monoid(n)
    auts = enumerate_automorphisms(s, budget=opts.budget, jobs=opts.jobs)
    antis = enumerate_anti_automorphisms(s, budget=opts.budget)
    c = c_group(s, budget=opts.budget, cap=opts.order_cap)
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    good = len(antis) == 0 and len(auts) == fact and c.order == 1
    return good, f"T{n}:|Aut|={len(auts)},|Aut-|={len(antis)},|C|={c.order}"


def _check_full_transformations(opts):
    ok2, d2 = _t_laws(2, opts)
    ok3, d3 = _t_laws(3, opts)
    return ok2 and ok3, f"{d2} {d3}"


def _check_t4_stretch(opts):
    return _t_laws(4, opts)


# --- symmetric and dual symmetric inverse monoids --------------------------

def _check_inverse_monoids(opts):
    parts = []
    ok = True
    fact = {2: 2, 3: 6}
    for n in (2, 3):
        s = families.symmetric_inverse_monoid(n)
        auts = enumerate_automorphisms(s, budget=opts.budget)
        c = c_group(s, budget=opts.budget, cap=opts.order_cap)
        iso = find_isomorphism(to_cayley_table(c), _z2_times_sym(n))
        good = len(auts) == fact[n] and iso is not None
        ok = ok and good
        parts.append(f"I{n}:|Aut|={len(auts)},|C|={c.order},Z2xSym({n})={iso is not None}")
    istar = families.dual_symmetric_inverse_monoid(3)
    auts = enumerate_automorphisms(istar, budget=opts.budget)
    c = c_group(istar, budget=opts.budget, cap=opts.order_cap)
    iso = find_isomorphism(to_cayley_table(c), _z2_times_sym(3))
    good = istar.n == 25 and len(auts) == 6 and c.order == 12 and iso is not None
    ok = ok and good
    parts.append(f"I*3:|Aut|={len(auts)},|C|={c.order}")
    return ok, " ".join(parts)


# --- partition monoids and the * map ---------------------------------------

def _check_partition_monoids(opts):
    parts = []
    ok = True
    for n in (2, 3):
        s = families.partition_monoid(n)
        star = families.star_map(n)
        proper = is_proper_involution(star, s)
        c = c_group(s, budget=opts.budget, cap=opts.order_cap)
        iso = find_isomorphism(to_cayley_table(c), _z2_times_sym(n))
        good = proper and iso is not None
        ok = ok and good
        parts.append(f"P{n}:star proper={proper},|C|={c.order},Z2xSym({n})={iso is not None}")
    return ok, " ".join(parts)


# --- rectangular and square bands ------------------------------------------

def _band_gamma(sig, tau, n):
    return tuple(sig[i // n] * n + tau[i % n] for i in range(n * n))


def _band_delta(sig, tau, n):
    return tuple(sig[i % n] * n + tau[i // n] for i in range(n * n))


def _check_rectangular_bands(opts):
    b23 = families.rectangular_band(2, 3)
    antis = enumerate_anti_automorphisms(b23, budget=opts.budget)
    c23 = c_group(b23, budget=opts.budget, cap=opts.order_cap)
    ok = len(antis) == 0 and c23.order == 1
    parts = [f"2x3:|Aut-|={len(antis)},|C|={c23.order}"]
    for n in (2, 3):
        b = families.rectangular_band(n, n)
        fact = [1, 1, 2, 6][n]
        auts = enumerate_automorphisms(b, budget=opts.budget)
        signed = signed_aut_group(b, budget=opts.budget)
        invs = involutions(b, budget=opts.budget)
        syms = [tuple(p) for p in permutations(range(n))]
        expected_inv = {_band_delta(s, invert(s), n) for s in syms}
        got_inv = {p.mapping for p in invs}
        c = c_group(b, budget=opts.budget, cap=opts.order_cap)
        expected_c = set()
        for s in syms:
            for t in syms:
                if Permutation(compose(s, t)).parity() == 0:
                    expected_c.add(_band_gamma(s, t, n))
                    expected_c.add(_band_delta(s, t, n))
        got_c = {p.mapping for p in c}
        good = (
            len(auts) == fact * fact
            and signed.order == 2 * fact * fact
            and got_inv == expected_inv
            and len(invs) == fact
            and got_c == expected_c
            and c.order == fact * fact
        )
        ok = ok and good
        parts.append(f"{n}x{n}:|Aut|={len(auts)},|I|={len(invs)},|C|={c.order}{'' if good else '!'}")
    return ok, " ".join(parts)


# --- doubled semigroups ----------------------------------------------------

def _doubled_expected_involutions(aut_maps, n):
    out = set()
    for a in aut_maps:
        ai = invert(a)
        m = [0] * (2 * n + 1)
        for i in range(n):
            m[i] = n + ai[i]
            m[n + i] = a[i]
        m[2 * n] = 2 * n
        out.add(tuple(m))
    return out


def _check_doubled_semigroups(opts):
    cases = [
        ("LZ2", validate([[0, 0], [1, 1]])),
        ("LZ3", validate([[0, 0, 0], [1, 1, 1], [2, 2, 2]])),
        ("T2", families.full_transformation_monoid(2)),
        ("T3", families.full_transformation_monoid(3)),
    ]
    ok = True
    parts = []
    for label, s in cases:
        auts = enumerate_automorphisms(s, budget=opts.budget)
        d = families.doubled_semigroup(s)
        d_auts = enumerate_automorphisms(d, budget=opts.budget, jobs=opts.jobs)
        d_invs = involutions(d, budget=opts.budget)
        expected = _doubled_expected_involutions([a.mapping for a in auts], s.n)
        c = c_group(d, budget=opts.budget, cap=opts.order_cap)
        kg = k_group(to_cayley_table(_aut_as_group(s, budget=opts.budget)))
        good = (
            len(d_auts) == len(auts) ** 2
            and {p.mapping for p in d_invs} == expected
            and c.order == 2 * kg.order
        )
        ok = ok and good
        parts.append(
            f"{label}:|Aut(D)|={len(d_auts)},|I(D)|={len(d_invs)},|C(D)|={c.order},2|K|={2 * kg.order}"
        )
    return ok, " ".join(parts)


# --- the graph-to-semigroup construction -----------------------------------

def _frucht_corpus():
    return [
        ("P2", path_graph(2)),
        ("P3", path_graph(3)),
        ("P4", path_graph(4)),
        ("P5", path_graph(5)),
        ("C3", cycle_graph(3)),
        ("C4", cycle_graph(4)),
        ("C5", cycle_graph(5)),
        ("C6", cycle_graph(6)),
        ("K4", complete_graph(4)),
        ("K5", complete_graph(5)),
        ("star4", star_graph(4)),
        ("rigid7", rigid_tree()),
    ]


def _check_frucht(opts):
    ok = True
    parts = []
    for label, g in _frucht_corpus():
        s = frucht_semigroup(g)
        graph_auts = graph_automorphisms(g)
        semi_auts = enumerate_automorphisms(s, budget=opts.budget)
        c_semi = c_group(s, budget=opts.budget, cap=opts.order_cap)
        c_graph = graph_involution_group(g, cap=opts.order_cap)
        good = len(semi_auts) == len(graph_auts) and c_semi.order == c_graph.order
        ok = ok and good
        parts.append(f"{label}:{len(semi_auts)}/{c_semi.order}{'' if good else '!'}")
    return ok, f"|Aut(S)|/|C(S)| per graph: " + " ".join(parts)


# --- every permutation is a product of two involutions ---------------------

def _check_factorization(opts):
    count = 0
    for n in range(1, 7):
        for m in permutations(range(n)):
            pi = Permutation(m)
            sigma, tau = two_involution_factorization(pi)
            if not (
                (sigma * sigma).is_identity()
                and (tau * tau).is_identity()
                and (sigma * tau) == pi
            ):
                return False, f"failed on {pi!r}"
            count += 1
    return True, f"{count} permutations factored across Sym(1)..Sym(6)"


# --- K_G = {(g, h) : gh in [G, G]} ------------------------------------------

def _kgroup_corpus():
    out = [(f"Z{n}", families.cyclic_group(n)) for n in range(1, 13)]
    out += [
        ("Klein", families.klein_four()),
        ("Z2^3", families.elementary_abelian_two_group(3)),
        ("D4", families.dihedral_group(4)),
        ("D5", families.dihedral_group(5)),
        ("D6", families.dihedral_group(6)),
        ("Q8", families.quaternion_group()),
        ("Sym3", families.sym_group_table(3)),
        ("Alt4", families.alternating_group_table(4)),
        ("Sym4", families.sym_group_table(4)),
        ("Z2xZ6", families.direct_product_table(families.cyclic_group(2), families.cyclic_group(6))),
        ("Z3xZ3", families.direct_product_table(families.cyclic_group(3), families.cyclic_group(3))),
        ("Z2xSym3", families.direct_product_table(families.cyclic_group(2), families.sym_group_table(3))),
    ]
    return out


def _check_k_groups(opts):
    ok = True
    parts = []
    for label, table in _kgroup_corpus():
        kg = k_group(table)  # raises if closure != characterization
        good = kg.order % table.n == 0
        if label == "Sym3":
            # independent route: same-parity pairs
            perms = [Permutation(p) for p in sorted(permutations(range(3)))]
            expected = {
                (i, j)
                for i in range(6)
                for j in range(6)
                if perms[i].parity() == perms[j].parity()
            }
            good = good and kg.order == 18 and kg.elements == frozenset(expected)
        ok = ok and good
        parts.append(f"{label}:{kg.order}{'' if good else '!'}")
    return ok, "|K_G|: " + " ".join(parts)


# --- split/central laws for C(S) under a proper involution -----------------

def _split_law_corpus():
    return [
        ("Sym3", families.sym_group_table(3)),
        ("Sym4", families.sym_group_table(4)),
        ("band2x2", families.rectangular_band(2, 2)),
        ("band3x3", families.rectangular_band(3, 3)),
        ("P2", families.partition_monoid(2)),
        ("P3", families.partition_monoid(3)),
        ("I2", families.symmetric_inverse_monoid(2)),
        ("I3", families.symmetric_inverse_monoid(3)),
        ("I*3", families.dual_symmetric_inverse_monoid(3)),
        ("D_LZ2", families.doubled_semigroup(validate([[0, 0], [1, 1]]))),
        ("D_T2", families.doubled_semigroup(families.full_transformation_monoid(2))),
    ]


def _check_involution_split_laws(opts):
    ok = True
    split_checked = 0
    central_checked = 0
    parts = []
    for label, s in _split_law_corpus():
        auts = enumerate_automorphisms(s, budget=opts.budget)
        invs = involutions(s, budget=opts.budget)
        proper = [p for p in invs if is_proper_involution(p, s)]
        if not proper:
            continue
        c = c_group(s, budget=opts.budget, cap=opts.order_cap)
        aut_set = set(auts.elements)
        c_in_aut = sum(1 for p in c if p in aut_set)
        good = c.order == 2 * c_in_aut
        split_checked += 1
        central = [
            iota
            for iota in proper
            if all(
                compose(a.mapping, iota.mapping) == compose(iota.mapping, a.mapping)
                for a in auts
            )
        ]
        if central:
            iota = central[0]
            j_set = order_two_automorphisms(s, budget=opts.budget)
            g = g_group(s, budget=opts.budget, cap=opts.order_cap)
            psi = {compose(a.mapping, iota.mapping) for a in j_set}
            good = good and psi == {p.mapping for p in invs} and c.order == 2 * g.order
            central_checked += 1
        ok = ok and good
        parts.append(f"{label}{'' if good else '!'}")
    ok = ok and split_checked >= 5 and central_checked >= 3
    return ok, (
        f"split law on {split_checked} semigroups, central/Psi law on "
        f"{central_checked}: " + " ".join(parts)
    )


# --- partially commutative words --------------------------------------------

def _random_context(rng):
    m = rng.randint(1, 5)
    edges = [(i, j) for i in range(m) for j in range(i + 1, m) if rng.random() < 0.5]
    return TraceContext.from_edges(m, edges)


def _random_word(rng, ctx, max_len=8):
    return ctx.word(rng.randrange(ctx.m) for _ in range(rng.randint(1, max_len)))


def _check_trace_words(opts):
    rng = random.Random(0x5EED)
    cases = failures = 0
    while cases < 1000:
        ctx = _random_context(rng)
        auts = list(graph_automorphisms(ctx.graph))
        u = _random_word(rng, ctx)
        cls = bfs_trace_class(u)
        nf = normal_form(u).letters
        w = ctx.word(rng.choice(sorted(cls)))
        v = _random_word(rng, ctx)
        pi = rng.choice(auts)
        sg = rng.choice(auts)
        checks = [
            nf == min(cls),
            normal_form(w).letters == nf,
            trace_equal(u, w),
            trace_equal(u, v) == (v.letters in cls),
            trace_equal(gamma_map(pi, u), gamma_map(pi, w)),
            trace_equal(delta_map(pi, u), delta_map(pi, w)),
        ]
        if len(u) + len(v) <= 16:
            uv = u.concat(v)
            checks.append(trace_equal(gamma_map(pi, uv), gamma_map(pi, u).concat(gamma_map(pi, v))))
            checks.append(trace_equal(delta_map(pi, uv), delta_map(pi, v).concat(delta_map(pi, u))))
        checks.append(gamma_map(pi, gamma_map(sg, u)).letters == gamma_map(pi * sg, u).letters)
        checks.append(delta_map(pi, delta_map(sg, u)).letters == gamma_map(pi * sg, u).letters)
        checks.append(gamma_map(pi, delta_map(sg, u)).letters == delta_map(pi * sg, u).letters)
        checks.append(delta_map(pi, gamma_map(sg, u)).letters == delta_map(pi * sg, u).letters)
        dd = delta_map(pi, delta_map(pi, u))
        if (pi * pi).is_identity():
            checks.append(trace_equal(dd, u))
        else:
            x = next(x for x in range(ctx.m) if pi.mapping[pi.mapping[x]] != x)
            w1 = ctx.word([x])
            checks.append(not trace_equal(delta_map(pi, delta_map(pi, w1)), w1))
        cases += 1
        if not all(checks):
            failures += 1
    return failures == 0, f"{cases} randomized cases, {failures} failures"


# --- search engine vs. brute force on small semigroups ---------------------

def _brute_morphisms(s: FiniteSemigroup, anti: bool):
    n, t = s.n, s.table
    out = []
    for p in permutations(range(n)):
        good = True
        for i in range(n):
            row = t[i]
            for j in range(n):
                lhs = p[row[j]]
                rhs = t[p[j]][p[i]] if anti else t[p[i]][p[j]]
                if lhs != rhs:
                    good = False
                    break
            if not good:
                break
        if good:
            out.append(p)
    return out


def _random_transformation_semigroup(rng):
    for _ in range(50):
        m = rng.randint(2, 4)
        k = rng.randint(1, 2)
        maps = [tuple(rng.randrange(m) for _ in range(m)) for _ in range(k)]
        elems = set(maps)
        work = list(elems)
        while work and len(elems) <= 6:
            f = work.pop()
            for g in tuple(elems):
                for h in (tuple(f[g[x]] for x in range(m)), tuple(g[f[x]] for x in range(m))):
                    if h not in elems:
                        elems.add(h)
                        work.append(h)
        if len(elems) > 6:
            continue
        order = sorted(elems)
        index = {f: i for i, f in enumerate(order)}
        table = [
            [index[tuple(f[g[x]] for x in range(m))] for g in order]
            for f in order
        ]
        return validate(table)
    return families.cyclic_group(rng.randint(2, 6))


def _random_table_semigroup(rng):
    n = rng.choice((2, 2, 3))
    for _ in range(5000):
        table = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        try:
            return validate(table)
        except Exception:
            continue
    return families.cyclic_group(n)


def _completeness_corpus(rng):
    corpus = [
        families.cyclic_group(4),
        families.cyclic_group(6),
        families.klein_four(),
        families.sym_group_table(3),
        families.rectangular_band(2, 3),
        families.rectangular_band(2, 2),
        families.zero_semigroup(3),
        families.full_transformation_monoid(2),
        families.doubled_semigroup(validate([[0, 0], [1, 1]])),
        frucht_semigroup(path_graph(3)),
        frucht_semigroup(complete_graph(3)),
        families.dual_table(families.rectangular_band(2, 3)),
        families.direct_product_table(families.cyclic_group(2), families.cyclic_group(3)),
        families.symmetric_inverse_monoid(1),
    ]
    while len(corpus) < 200:
        roll = rng.random()
        if roll < 0.45:
            corpus.append(_random_transformation_semigroup(rng))
        elif roll < 0.9:
            corpus.append(_random_table_semigroup(rng))
        else:
            base = corpus[rng.randrange(len(corpus))]
            corpus.append(families.dual_table(base))
    return corpus


def _check_engine_completeness(opts):
    rng = random.Random(0xCA11)
    corpus = _completeness_corpus(rng)
    for i, s in enumerate(corpus):
        engine_auts = [p.mapping for p in enumerate_automorphisms(s, budget=opts.budget)]
        if engine_auts != _brute_morphisms(s, anti=False):
            return False, f"automorphism mismatch on corpus item {i} (n={s.n})"
        engine_anti = [p.mapping for p in enumerate_anti_automorphisms(s, budget=opts.budget)]
        if engine_anti != _brute_morphisms(s, anti=True):
            return False, f"anti-automorphism mismatch on corpus item {i} (n={s.n})"
    return True, f"{len(corpus)} semigroups of order <= 6 match the n! brute force"


# ---------------------------------------------------------------------------

@dataclass
class BatteryOptions:
    budget: int | None = None
    order_cap: int | None = None
    jobs: int = 1


_CHECKS = [
    ("klein", 1.0, False, _check_klein),
    ("zn_sweep", 30.0, False, _check_zn_sweep),
    ("symmetric_groups", 120.0, False, _check_symmetric_groups),
    ("sym6_stretch", 600.0, True, _check_sym6_stretch),
    ("full_transformations", 60.0, False, _check_full_transformations),
    ("t4_stretch", 600.0, True, _check_t4_stretch),
    ("inverse_monoids", 120.0, False, _check_inverse_monoids),
    ("partition_monoids", 300.0, False, _check_partition_monoids),
    ("rectangular_bands", 60.0, False, _check_rectangular_bands),
    ("doubled_semigroups", 120.0, False, _check_doubled_semigroups),
    ("frucht_graphs", 60.0, False, _check_frucht),
    ("two_involution_factorization", 10.0, False, _check_factorization),
    ("k_groups", 60.0, False, _check_k_groups),
    ("involution_split_laws", 60.0, False, _check_involution_split_laws),
    ("trace_words", 60.0, False, _check_trace_words),
    ("engine_completeness", 120.0, False, _check_engine_completeness),
]


def check_names(stretch: bool = True):
    return [name for name, _, s, _ in _CHECKS if stretch or not s]


def run_battery(
    *,
    stretch: bool = False,
    only=None,
    budget: int | None = None,
    order_cap: int | None = None,
    jobs: int = 1,
    on_result=None,
) -> list[CheckResult]:
    """Run the acceptance checks; ``stretch`` adds Sym(6) and T_4.

    ``on_result`` is called with each :class:`CheckResult` as it finishes.
    """
    opts = BatteryOptions(budget=budget, order_cap=order_cap, jobs=jobs)
    results = []
    for name, bound, is_stretch, fn in _CHECKS:
        if is_stretch and not stretch:
            continue
        if only and name not in only:
            continue
        result = _run(name, bound, lambda fn=fn: fn(opts))
        if on_result is not None:
            on_result(result)
        results.append(result)
    return results
