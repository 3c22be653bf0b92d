"""Built-in verification suite.

Re-derives small and large values through independent routes and compares
them: brute-force enumeration against formulas, dense against separable
pipelines, recurrence against closed form, and everything against the frozen
reference sequences.  `quick` stays at truncation order 20 and census size 8;
`full` pushes to order 50, census size 9, and the index-500 values.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from . import census, counting, diagram, reference
from .cycleindex import CycleType, count_commuting_order_p, cycle_types
from .series import TruncSeries, euler_phi, euler_transform, inverse_euler_transform, moebius_mu


class SelfTestFailure(Exception):
    pass


def _fail(name, detail):
    raise SelfTestFailure("%s: %s" % (name, detail))


def _check_series_roundtrips():
    rng = random.Random(20259)
    for case in range(30):
        order = rng.randrange(1, 33)
        coeffs = [Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
                  for _ in range(order + 1)]
        coeffs[0] = Fraction(0)
        f = TruncSeries(order, coeffs)
        if f.exp().log() != f:
            _fail("series-roundtrips", "exp/log failed on case %d" % case)
        if euler_transform(inverse_euler_transform(f.exp())) != f.exp():
            _fail("series-roundtrips", "euler transform failed on case %d" % case)


def _check_number_theory():
    for n in range(1, 2001):
        tot = sum(euler_phi(d) for d in range(1, n + 1) if n % d == 0)
        if tot != n:
            _fail("number-theory", "totient divisor sum wrong at %d" % n)
        ms = sum(moebius_mu(d) for d in range(1, n + 1) if n % d == 0)
        if ms != (1 if n == 1 else 0):
            _fail("number-theory", "moebius divisor sum wrong at %d" % n)


def _check_recurrence(order):
    if counting.disconnected_egf_by_recurrence(order) != counting.disconnected_egf(order):
        _fail("recurrence", "recurrence and closed form disagree at order %d" % order)


def _check_dense_vs_fast():
    dense = counting.conjugacy_class_series_dense(20)
    fast = counting.conjugacy_class_series(20)
    if dense != fast:
        _fail("dense-vs-fast", "pipelines disagree at order 20")


def _check_reference(order):
    pointed = counting.subgroup_series(order).integer_coefficients()[1:]
    classes = counting.conjugacy_class_series(order).integer_coefficients()[1:]
    if pointed != list(reference.SUBGROUPS_BY_INDEX[:order]):
        _fail("reference", "subgroup counts disagree up to order %d" % order)
    if classes != list(reference.CONJUGACY_CLASSES_BY_INDEX[:order]):
        _fail("reference", "class counts disagree up to order %d" % order)


def _check_census(max_size):
    pointed = counting.subgroup_series(max_size).integer_coefficients()
    classes = counting.conjugacy_class_series(max_size).integer_coefficients()
    for n in range(1, max_size + 1):
        report = census.enumerate_size(n)
        if report.pointed_classes != pointed[n]:
            _fail("census", "pointed count at size %d: census %d, series %d"
                  % (n, report.pointed_classes, pointed[n]))
        if report.unpointed_classes != classes[n]:
            _fail("census", "class count at size %d: census %d, series %d"
                  % (n, report.unpointed_classes, classes[n]))


def _check_normal_structure():
    expected = {3: 1, 5: 0, 6: 2}
    for size, count in expected.items():
        normals = census.enumerate_normal(size)
        if len(normals) != count:
            _fail("normal-structure", "size %d: %d normal classes, expected %d"
                  % (size, len(normals), count))
    normals = census.enumerate_normal(6)
    orders = sorted(diagram.automorphism_order(d) for d in normals)
    if orders != [6, 6]:
        _fail("normal-structure", "size-6 automorphism orders %r != [6, 6]" % orders)
    abelian = []
    for d in normals:
        maps = diagram.automorphisms(d)
        abelian.append(all(
            tuple(f[g[i]] for i in range(d.n)) == tuple(g[f[i]] for i in range(d.n))
            for f, g in itertools.combinations(maps, 2)
        ))
    if sorted(abelian) != [False, True]:
        _fail("normal-structure",
              "size-6 normal classes should split abelian/nonabelian, got %r" % abelian)


def _brute_commuting(p, ctype):
    n = ctype.weight
    sigma = []
    for k, m in ctype.pairs:
        for _ in range(m):
            start = len(sigma)
            sigma.extend(list(range(start + 1, start + k)) + [start])
    count = 0
    for tau in itertools.permutations(range(n)):
        power = list(range(n))
        for _ in range(p):
            power = [tau[i] for i in power]
        if power != list(range(n)):
            continue
        if all(tau[sigma[i]] == sigma[tau[i]] for i in range(n)):
            count += 1
    return count


def _check_commuting_counts(max_weight):
    for p in (2, 3):
        for w in range(max_weight + 1):
            for ct in cycle_types(w):
                formula = count_commuting_order_p(p, ct)
                brute = _brute_commuting(p, ct)
                if formula != brute:
                    _fail("commuting-counts",
                          "p=%d type %r: formula %d, brute force %d"
                          % (p, ct.pairs, formula, brute))


def _check_code_invariance():
    rng = random.Random(1729)
    for size in (5, 6, 7):
        for d in census.enumerate_size(size).class_representatives:
            code = diagram.canonical_code(d)
            for _ in range(5):
                perm = list(range(size))
                rng.shuffle(perm)
                if diagram.canonical_code(d.relabel(perm)) != code:
                    _fail("code-invariance", "relabeling changed the code at size %d" % size)


def _check_weight_500(report):
    rec = counting.disconnected_egf_by_recurrence(500)
    if rec != counting.disconnected_egf(500):
        _fail("weight-500", "recurrence and closed form disagree at order 500")
    pointed = counting.subgroup_series(500)[500]
    if pointed != reference.SUBGROUPS_INDEX_500:
        _fail("weight-500", "index-500 subgroup count mismatch")
    classes = counting.conjugacy_class_series(500)[500]
    if classes != reference.CONJUGACY_CLASSES_INDEX_500:
        _fail("weight-500", "index-500 class count mismatch")
    report("  index-500 subgroups: %d" % pointed)
    report("  index-500 classes:   %d" % classes)


def run_selftest(full: bool, report=print) -> bool:
    """Run the suite; prints one line per check.  Returns True on success,
    False after reporting the first failing check."""
    checks = [
        ("series-roundtrips", _check_series_roundtrips),
        ("number-theory", _check_number_theory),
        ("recurrence-order-20", lambda: _check_recurrence(20)),
        ("dense-vs-fast-order-20", _check_dense_vs_fast),
        ("reference-order-20", lambda: _check_reference(20)),
        ("census-to-size-8", lambda: _check_census(8)),
        ("normal-structure", _check_normal_structure),
        ("commuting-counts-weight-5", lambda: _check_commuting_counts(5)),
        ("code-invariance", _check_code_invariance),
    ]
    if full:
        checks += [
            ("reference-order-50", lambda: _check_reference(50)),
            ("census-size-9", lambda: _check_census(9)),
            ("weight-500", lambda: _check_weight_500(report)),
        ]
    for name, check in checks:
        try:
            check()
        except SelfTestFailure as exc:
            report("FAIL %s" % exc)
            return False
        except Exception as exc:  # an invariant broke in an unexpected way
            report("FAIL %s: unexpected %s: %s" % (name, type(exc).__name__, exc))
            return False
        report("ok %s" % name)
    return True
