"""Verification harness: one named check per acceptance criterion.

Each check returns a :class:`CheckResult`; a failing or crashing check is
recorded and the remaining checks still run.
"""

from __future__ import annotations

import time
import traceback
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields, replace
from typing import Any, Callable

from fishburn import ascent, matching, matrix, perm, poset, series
from fishburn.series import TruncatedSeries

# counts frozen from exhaustive enumeration (see tests/oracles)
FISHBURN = (1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240, 201608)
PRIMITIVE = (1, 1, 1, 2, 5, 16, 61, 271, 1372, 7795)

# u-coefficients of G(u,1,y,t): numerator polynomials and the power of (1-ty) below them
FIG_P = {
    0: ({"t": 1}, 1),
    1: ({"t^2": 1, "t^3*y": -1, "t^3": 1}, 3),
    2: ({"t^3": 1, "t^4": 4, "t^5": 4, "t^6": 1, "t^4*y": -3, "t^5*y": -8, "t^6*y": -4,
         "t^5*y^2": 3, "t^6*y^2": 4, "t^6*y^3": -1}, 6),
    3: ({"t^4": 1, "t^5": 11, "t^6": 33, "t^7": 42, "t^8": 26, "t^9": 8, "t^10": 1,
         "t^5*y": -6, "t^6*y": -55, "t^7*y": -132, "t^8*y": -126, "t^9*y": -52, "t^10*y": -8,
         "t^6*y^2": 15, "t^7*y^2": 110, "t^8*y^2": 198, "t^9*y^2": 126, "t^10*y^2": 26,
         "t^7*y^3": -20, "t^8*y^3": -110, "t^9*y^3": -132, "t^10*y^3": -42,
         "t^8*y^4": 15, "t^9*y^4": 55, "t^10*y^4": 33, "t^9*y^5": -6, "t^10*y^5": -11,
         "t^10*y^6": 1}, 10),
}

# coefficient lists of q_i(t), starting at t^(i+1); G(u,1,0,t) = 1 + sum q_i u^i
FIG_Q = {
    0: [1],
    1: [1, 1],
    2: [1, 4, 4, 1],
    3: [1, 11, 33, 42, 26, 8, 1],
    4: [1, 26, 171, 507, 840, 865, 584, 262, 76, 13, 1],
    5: [1, 57, 718, 4017, 12866, 26831, 39268, 42211, 34221, 21184, 10015, 3571, 933, 169, 19, 1],
}

G_T2 = {"u*v": 1, "y": 1}
G_T4 = {"u^2": 1, "u^2*v": 2, "u^2*v^2": 1, "u^3*v^3": 1, "u*y": 3, "u^2*v^2*y": 3,
        "u*v*y^2": 3, "y^3": 1}


@dataclass(frozen=True)
class Limits:
    ascent: int = 8
    poset: int = 6
    matrix: int = 6
    perm: int = 7
    matching: int = 6
    joint: int = 7
    primitive: int = 9
    roundtrip: int = 6
    bounded_runs: int = 8
    fig1_order: int = 12
    fig2_order: int = 21
    unimodal: int = 7
    recurrence_order: int = 10

    def capped(self, n: int) -> Limits:
        """Every size limit reduced to at most ``n`` (series orders untouched)."""
        sizes = ("ascent", "poset", "matrix", "perm", "matching", "joint", "primitive",
                 "roundtrip", "bounded_runs")
        return replace(self, **{name: min(getattr(self, name), n) for name in sizes})

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> Limits:
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown limit keys: {sorted(unknown)}")
        return cls(**{k: int(v) for k, v in data.items()})


@dataclass
class CheckResult:
    id: str
    params: dict[str, Any]
    status: str
    expected: Any
    actual: Any
    duration: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class VerificationReport:
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, durations: bool = True) -> dict[str, Any]:
        checks = []
        for c in self.checks:
            d = asdict(c)
            if not durations:
                d.pop("duration")
            checks.append(d)
        return {"passed": self.passed, "checks": checks}


# ---------------------------------------------------------------------------
# shared brute-force tables


def ascent_counts(n_max: int, max_run: int | None = None) -> list[int]:
    return [sum(1 for _ in ascent.enumerate_ascent(n, max_run)) for n in range(n_max + 1)]


def bounded_run_count(n: int, k: int) -> int:
    """|A_n^(k)|, with the convention that k = 0 admits only the empty sequence."""
    if k == 0:
        return 1 if n == 0 else 0
    return sum(1 for _ in ascent.enumerate_ascent(n, k))


def poset_class_count(n: int, max_indist: int | None = None) -> int:
    if n == 0:
        return 1
    forms = set()
    for x in ascent.enumerate_ascent(n):
        p = poset.build(x)
        if max_indist is None or poset.poset_stats(p).maxindist <= max_indist:
            forms.add(poset.canonical_form(p))
    return len(forms)


def series_slice(g: TruncatedSeries, n: int) -> Counter:
    """[t^n] of G as a Counter of (u, v, y) exponents."""
    return Counter({(m[1], m[2], m[3]): c for m, c in g.items() if m[0] == n})


def ascent_distribution(n: int) -> Counter:
    out: Counter = Counter()
    for x in ascent.enumerate_ascent(n):
        s = ascent.stats(x)
        out[(s.asc, s.last, s.zeros)] += 1
    return out


def poset_distribution(n: int) -> Counter:
    out: Counter = Counter()
    for x in ascent.enumerate_ascent(n):
        s = poset.poset_stats(poset.build(x))
        out[(s.levels, s.minmax, s.rep)] += 1
    return out


def matrix_distribution(n: int) -> Counter:
    out: Counter = Counter()
    for a in matrix.enumerate_matrices(n):
        s = matrix.matrix_stats(a)
        out[(s.dim - 1, s.index - 1, s.zeros)] += 1
    return out


def perm_distribution(n: int) -> Counter:
    out: Counter = Counter()
    for p in perm.enumerate_R(n):
        out[(ascent.asc(perm.inverse(p)), perm.b_label(p), perm.adjdes(p))] += 1
    return out


def matching_distribution(n: int) -> Counter:
    out: Counter = Counter()
    for m in matching.enumerate_stoimenow(n):
        s = matching.matching_stats(m)
        out[(s.cruns, s.larcs, s.echords)] += 1
    return out


# ---------------------------------------------------------------------------
# checks


def check_equinumerosity(lim: Limits):
    n_max = lim.ascent
    a = ascent_counts(n_max)
    p = series.P_series(n_max).univariate()
    fams = {
        "ascent": a,
        "P_series": p,
        "poset_classes": [poset_class_count(n) for n in range(lim.poset + 1)],
        "matrices": [sum(1 for _ in matrix.enumerate_matrices(n)) for n in range(lim.matrix + 1)],
        "perm_R": [sum(1 for _ in perm.enumerate_R(n)) for n in range(lim.perm + 1)],
        "matchings": [sum(1 for _ in matching.enumerate_stoimenow(n)) for n in range(lim.matching + 1)],
    }
    expected = list(FISHBURN[: n_max + 1])
    ok = all(values == expected[: len(values)] for values in fams.values())
    return ok, expected, fams, {"n": n_max}


def check_G_u_coefficients(lim: Limits):
    N = lim.fig1_order
    g = series.G_u1yt(N, u_order=3)
    bounds = (N, 0, 0, N)
    y_t = TruncatedSeries.polynomial({"t*y": 1}, bounds)
    mismatched = []
    for i, (poly, power) in FIG_P.items():
        want = TruncatedSeries.polynomial(poly, bounds) / (1 - y_t) ** power
        if i == 0:
            want = want + 1
        got = g.coefficient_series("u", i).truncate(bounds)
        if got != want:
            mismatched.append(i)
    return not mismatched, "u^0..u^3 equal P_i/(1-ty)^(1,3,6,10)", {"mismatched": mismatched}, {"N": N}


def _unimodal(values: list[int]) -> bool:
    while values and values[0] == 0:
        values = values[1:]
    while values and values[-1] == 0:
        values = values[:-1]
    i = 0
    while i + 1 < len(values) and values[i] <= values[i + 1]:
        i += 1
    return all(values[j] >= values[j + 1] for j in range(i, len(values) - 1))


def check_primitive_q(lim: Limits):
    N = lim.fig2_order
    g = series.G_primitive(N, u_order=5)
    got = {}
    mismatched = []
    for i, coeffs in FIG_Q.items():
        row = g.coefficient_series("u", i).univariate()
        row[0] -= 1 if i == 0 else 0
        want = [0] * (N + 1)
        for j, c in enumerate(coeffs):
            if i + 1 + j <= N:
                want[i + 1 + j] = c
        got[i] = row[i + 1:]
        if row != want:
            mismatched.append(i)
    top = lim.unimodal
    # q_n is a polynomial of degree (n+1)(n+2)/2; two spare orders confirm it ends there
    order = (top + 1) * (top + 2) // 2 + 2
    h = series.G_primitive(order, u_order=top)
    unimodal = {}
    polynomial = True
    for n in range(top + 1):
        q = h.coefficient_series("u", n).univariate()
        if n == 0:
            q[0] -= 1
        deg = (n + 1) * (n + 2) // 2
        polynomial &= not any(q[deg + 1:])
        unimodal[n] = _unimodal(q)
    ok = not mismatched and all(unimodal.values()) and polynomial
    actual = {"mismatched": mismatched, "unimodal": unimodal, "polynomial_degrees_confirmed": polynomial}
    return ok, {"q": {i: c for i, c in FIG_Q.items()}, "unimodal_up_to": top}, actual, {"N": N, "unimodal_n": top}


def check_joint_distribution(lim: Limits):
    n_max = lim.joint
    g = series.G_full(n_max)
    bad = []
    integral = g.is_integral() and all(c > 0 for _, c in g.items())
    degrees_ok = all(max(m[1], m[2], m[3]) <= m[0] for m, _ in g.items())
    for n in range(1, n_max + 1):
        want = series_slice(g, n)
        for name, dist in (("ascent", ascent_distribution(n)), ("poset", poset_distribution(n)),
                           ("matrix", matrix_distribution(n))):
            if dist != want:
                bad.append(f"{name}@{n}")
    ok = not bad and integral and degrees_ok and g.constant_term() == 1
    actual = {"mismatches": bad, "nonnegative_integer_coefficients": integral,
              "exponents_within_length": degrees_ok}
    return ok, "[t^n]G_full equals each family's (u,v,y) distribution", actual, {"n": n_max}


def check_runs_and_entries(lim: Limits):
    n_max = lim.joint
    bad = []
    examined = 0
    for n in range(1, n_max + 1):
        for x in ascent.enumerate_ascent(n):
            examined += 1
            p = poset.build(x)
            run = ascent.max_run(x)
            classes = p.indistinguishable_classes()
            if max(len(c) for c in classes) != run:
                bad.append(("maxindist", x))
            runs = []
            start = 1
            for m in ascent.run_decomposition(x).multiplicities:
                runs.append(frozenset(range(start, start + m)))
                start += m
            if sorted(classes, key=min) != runs:
                bad.append(("classes", x))
            top = matrix.zeta(x).max_entry
            for k in (1, 2, 3):
                if (top <= k) != (run <= k):
                    bad.append((f"entries<={k}", x))
    return not bad, "indistinguishable classes are exactly runs; max entry <= k iff runs <= k", \
        {"violations": [f"{kind}:{x}" for kind, x in bad[:10]], "examined": examined}, {"n": n_max, "k": [1, 2, 3]}


def check_primitive_count(lim: Limits):
    n_max = lim.primitive
    brute = ascent_counts(n_max, max_run=1)
    from_one = series.K_series(n_max).univariate()
    from_zero = series.K_series(n_max, product_start=0).univariate()
    ok = brute == from_one and brute == list(PRIMITIVE[: n_max + 1])
    verdict = ("product over i >= 1 reproduces the primitive counts; "
               "starting at i = 0 makes every summand vanish" if ok and not any(from_zero)
               else "inconclusive")
    actual = {"brute_force": brute, "product_from_1": from_one, "product_from_0": from_zero,
              "adjudication": verdict}
    return ok and not any(from_zero), list(PRIMITIVE[: n_max + 1]), actual, {"n": n_max}


def check_bounded_runs(lim: Limits):
    n_max = lim.bounded_runs
    table = {}
    ok = True
    for k in (1, 2, 3):
        plus = series.Bk_series(n_max, k).univariate()
        plain = series.Bk_series(n_max, k, denominator_power=k).univariate()
        runs_k = [bounded_run_count(n, k) for n in range(n_max + 1)]
        runs_k1 = [bounded_run_count(n, k - 1) for n in range(n_max + 1)]
        table[k] = {"denominator_1-x^(k+1)": plus, "denominator_1-x^k": plain,
                    "runs<=k": runs_k, "runs<=k-1": runs_k1}
        ok &= plus == runs_k and plain == runs_k1 and plain != runs_k
    verdict = ("(1-x)/(1-x^(k+1)) counts runs <= k; the printed (1-x)/(1-x^k) form counts "
               "runs <= k-1, so statements using 1-x^k (introductory summary display and "
               "closing permutation/matching count) are off by one in k")
    return ok, "1-x^(k+1) form matches runs<=k", {"table": table, "adjudication": verdict if ok else "inconclusive"}, \
        {"n": n_max, "k": [1, 2, 3]}


def check_kernel_recurrence(lim: Limits):
    N = lim.recurrence_order
    residual = series.recurrence_residual(N)
    at_root = series.kernel_at_root(N)
    actual = {"residual_terms": len(residual), "kernel_at_root_terms": len(at_root)}
    return residual.is_zero() and at_root.is_zero(), {"residual_terms": 0, "kernel_at_root_terms": 0}, actual, {"N": N}


def check_round_trips(lim: Limits):
    n_max = lim.roundtrip
    bad = []
    for n in range(1, n_max + 1):
        seqs = list(ascent.enumerate_ascent(n))
        images = {matrix.zeta(x): x for x in seqs}
        oracle = set(matrix.enumerate_matrices(n))
        if set(images) != oracle or len(images) != len(seqs):
            bad.append(f"zeta-image@{n}")
        if any(matrix.gamma(a) != x for a, x in images.items()):
            bad.append(f"gamma.zeta@{n}")
        if any(matrix.zeta(matrix.gamma(a)) != a for a in oracle):
            bad.append(f"zeta.gamma@{n}")
        if any(perm.lambda_(perm.upsilon(x)) != x for x in seqs):
            bad.append(f"lambda.upsilon@{n}")
        if any(perm.upsilon(perm.lambda_(p)) != p for p in perm.enumerate_R(n)):
            bad.append(f"upsilon.lambda@{n}")
    return not bad, "all identities hold", {"failures": bad}, {"n": n_max}


def check_transfers(lim: Limits):
    n_max = lim.roundtrip
    bad = []
    for n in range(1, n_max + 1):
        for x in ascent.enumerate_ascent(n):
            p = perm.upsilon(x)
            s = ascent.stats(x)
            if (perm.adjdes(p), perm.b_label(p), ascent.asc(perm.inverse(p))) != (s.zeros, s.last, s.asc):
                bad.append(f"stats{x}")
        for k in (1, 2):
            image = {perm.upsilon(x) for x in ascent.enumerate_ascent(n, k)}
            r_k = set(perm.enumerate_R(n, k))
            if image != r_k:
                bad.append(f"upsilon(A^({k}))@{n}")
            m_k = sum(1 for _ in matching.enumerate_stoimenow(n, k))
            if m_k != len(r_k) or m_k != series.Bk_series(n, k).univariate()[n]:
                bad.append(f"|Match^({k})|@{n}")
        if matching_distribution(n) != ascent_distribution(n):
            bad.append(f"matching-distribution@{n}")
    return not bad, "all transfers hold", {"failures": bad[:20]}, {"n": n_max, "k": [1, 2]}


def check_pinned_values(lim: Limits):
    results = {}
    a = matrix.StaircaseMatrix.from_rows([[1, 7, 1], [0, 9, 3], [0, 0, 2]])
    results["add-worked-example"] = matrix.add(a, 2).to_lists() == [[1, 7, 1, 0], [0, 9, 3, 0], [0, 0, 0, 1], [0, 0, 0, 2]]
    s = matrix.matrix_stats(matrix.StaircaseMatrix.from_rows([[1, 3, 0, 0], [0, 0, 2, 0], [0, 0, 0, 5], [0, 0, 0, 2]]))
    results["matrix-stats"] = (s.sum, s.nz, s.zeros, s.index) == (13, 5, 8, 3)
    ex = example_poset()
    st = poset.poset_stats(ex)
    results["example-poset"] = (st.levels, st.srank, st.minmax, st.maxindist, st.rep) == (4, 2, 2, 2, 1)
    results["upsilon"] = perm.upsilon((0, 1, 1, 0, 2, 0, 1)) == (6, 4, 1, 7, 3, 2, 5)
    results["adjdes"] = perm.adjdes((2, 5, 4, 3, 1, 7, 6)) == 3
    results["b-label"] = perm.b_label((6, 1, 3, 2, 5, 4, 7)) == 3
    results["standardize"] = perm.standardize((3, 9, 6, 8, 5)) == (1, 5, 3, 4, 2)
    results["M3-size"] = sum(1 for _ in matrix.enumerate_matrices(3)) == 5
    g = series.G_full(4)
    results["G-t2-t4"] = (_slice_equals(g, 2, G_T2) and _slice_equals(g, 4, G_T4))
    return all(results.values()), {k: True for k in results}, results, {}


def _slice_equals(g: TruncatedSeries, n: int, poly: dict[str, int]) -> bool:
    want = Counter()
    for mono, c in poly.items():
        m = series.parse_monomial(mono)
        want[(m[1], m[2], m[3])] += c
    return series_slice(g, n) == want


EXAMPLE_LABELS = "abcdefgh"
EXAMPLE_DOWN = {"a": "", "b": "", "c": "a", "d": "a", "e": "a", "f": "ab", "g": "abcd", "h": "abcdeg"}


def example_poset() -> poset.IntervalOrder:
    """The eight-element poset a..h, relabeled a->1, ..., h->8."""
    label = {ch: i for i, ch in enumerate(EXAMPLE_LABELS, start=1)}
    return poset.IntervalOrder.from_down_sets(
        {label[x]: {label[z] for z in ds} for x, ds in EXAMPLE_DOWN.items()})


CHECKS: dict[str, Callable[[Limits], tuple]] = {
    "equinumerosity": check_equinumerosity,
    "G_u1yt-u-coefficients": check_G_u_coefficients,
    "G_primitive-q-polynomials": check_primitive_q,
    "joint-distribution": check_joint_distribution,
    "runs-indistinguishable-entries": check_runs_and_entries,
    "primitive-count-K": check_primitive_count,
    "bounded-runs-Bk": check_bounded_runs,
    "kernel-recurrence": check_kernel_recurrence,
    "round-trips": check_round_trips,
    "permutation-matching-transfers": check_transfers,
    "pinned-values": check_pinned_values,
}


def run_check(name: str, lim: Limits) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, expected, actual, params = CHECKS[name](lim)
        result = CheckResult(name, params, "pass" if ok else "fail", expected, actual)
    except Exception:
        result = CheckResult(name, {}, "fail", None, None, notes=[traceback.format_exc()])
    result.duration = round(time.perf_counter() - start, 3)
    return result


def _run_named(args: tuple[str, Limits]) -> CheckResult:
    return run_check(*args)


def run_all(lim: Limits | None = None, parallel: int = 1, only: list[str] | None = None) -> VerificationReport:
    lim = lim or Limits()
    names = list(CHECKS) if only is None else only
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_run_named, [(n, lim) for n in names]))
    else:
        results = [run_check(n, lim) for n in names]
    return VerificationReport(results)
