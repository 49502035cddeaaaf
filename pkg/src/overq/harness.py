"""Machine checks of the over q-binomial identities.

Each ``verify_*`` function builds both sides of an identity from independent
primitives and compares them exactly on an explicit validity window. The
result is a :class:`VerificationReport`; a failed identity is a ``FAIL``
report, never an exception.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from overq.enumeration import (
    box_counts,
    box_weight_polynomial,
    gap_congruence_counts,
    overpartition_counts,
    overpartition_part_counts,
    partitions,
    rank_counts,
    tau,
)
from overq.errors import DomainError
from overq.qbinomial import Method, over_binom, over_limit, over_poly, over_qbinomial, over_term
from overq.series import (
    INFINITY,
    QSeries,
    XQSeries,
    first_difference_xq,
    poch,
    qs_invert,
    qs_product_modular,
    qs_sum,
    xpoch,
    xs_invert,
    xs_substitute_scale,
    xs_sum,
)

PASS = "PASS"
FAIL = "FAIL"


@dataclass
class VerificationReport:
    identity: str
    params: dict[str, Any]
    status: str
    first_failure: dict[str, Any] | None = None
    elapsed: float = 0.0
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict[str, Any]:
        out = {
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "firstFailure": self.first_failure,
            "elapsedMs": round(self.elapsed * 1000, 3),
        }
        if self.info:
            out["info"] = self.info
        return out


@dataclass
class SeriesPair:
    """Two sides of an identity and the window on which they must agree."""

    lhs: QSeries | XQSeries
    rhs: QSeries | XQSeries
    xwindow: int
    qwindow: int

    def __post_init__(self):
        for side in (self.lhs, self.rhs):
            if isinstance(side, XQSeries):
                ok = side.xtrunc >= self.xwindow and side.qtrunc >= self.qwindow
            else:
                ok = self.xwindow == 0 and side.trunc >= self.qwindow
            if not ok:
                raise ValueError("a side is not valid on the requested window")

    def first_failure(self) -> tuple[int, int, int, int] | None:
        """``(a, b, lhs_coeff, rhs_coeff)`` at the smallest differing monomial."""
        lhs, rhs = self.lhs, self.rhs
        if isinstance(lhs, XQSeries):
            lw = lhs.truncate(self.xwindow, self.qwindow)
            rw = rhs.truncate(self.xwindow, self.qwindow)
            hit = first_difference_xq(lw, rw)
            if hit is None:
                return None
            a, b = hit
            return a, b, lw.coeff(a, b), rw.coeff(a, b)
        for b in range(self.qwindow + 1):
            if lhs[b] != rhs[b]:
                return 0, b, lhs[b], rhs[b]
        return None


class _Run:
    """Accumulates one report; the first failing check wins."""

    def __init__(self, identity: str, params: dict[str, Any]):
        self.identity = identity
        self.params = params
        self.failure: dict[str, Any] | None = None
        self.info: dict[str, Any] = {}
        self._t0 = time.perf_counter()

    @property
    def failed(self) -> bool:
        return self.failure is not None

    def _fail(self, check: str, a: int, b: int, lhs, rhs, cell: dict) -> None:
        if self.failure is None:
            self.failure = {"x": a, "q": b, "lhs": str(lhs), "rhs": str(rhs)}
            self.info["check"] = check
            if cell:
                self.info["cell"] = cell

    def pair(self, check: str, lhs, rhs, qwindow: int, xwindow: int = 0, **cell) -> bool:
        if self.failed:
            return False
        hit = SeriesPair(lhs, rhs, xwindow, qwindow).first_failure()
        if hit is not None:
            self._fail(check, *hit, cell)
            return False
        return True

    def equal(self, check: str, lhs: int, rhs: int, q: int = 0, **cell) -> bool:
        if self.failed:
            return False
        if lhs != rhs:
            self._fail(check, 0, q, lhs, rhs, cell)
            return False
        return True

    def membership(self, check: str, s: XQSeries, min_x: int, min_q: int, **cell) -> bool:
        """Every nonzero monomial of ``s`` has ``x``-degree >= min_x and ``q``-degree >= min_q."""
        if self.failed:
            return False
        for (a, b), c in s.coeffs.items():
            if a < min_x or b < min_q:
                self._fail(check, a, b, c, 0, cell)
                return False
        return True

    def report(self) -> VerificationReport:
        return VerificationReport(
            identity=self.identity,
            params=self.params,
            status=FAIL if self.failed else PASS,
            first_failure=self.failure,
            elapsed=time.perf_counter() - self._t0,
            info=self.info,
        )


def _poly(coeffs: Sequence[int], trunc: int) -> QSeries:
    return QSeries(coeffs, trunc)


# ---------------------------------------------------------------------------
# closed form, recurrences, limit


def verify_overG(Mmax: int = 8, Nmax: int = 8, budget=None) -> VerificationReport:
    """Closed sum, both recurrences and brute-force enumeration agree on the grid."""
    run = _Run("overG", {"Mmax": Mmax, "Nmax": Nmax})
    for M in range(Mmax + 1):
        for N in range(Nmax + 1):
            T = M * N
            closed = over_qbinomial(M, N, Method.CLOSED_SUM)
            run.pair("rec1", over_qbinomial(M, N, Method.RECURRENCE_1), closed, T, M=M, N=N)
            run.pair("rec2", over_qbinomial(M, N, Method.RECURRENCE_2), closed, T, M=M, N=N)
            table = box_weight_polynomial(M, N, by_overlines=True, budget=budget)
            oracle = [0] * (T + 1)
            for (n, _k), c in table.counts.items():
                oracle[n] += c
            run.pair("oracle", closed, _poly(oracle, T), T, M=M, N=N)
            for k in range(min(M, N) + 1):
                sliced = [table[n, k] for n in range(T + 1)]
                run.pair("over_term", over_term(M, N, k), _poly(sliced, T), T, M=M, N=N, k=k)
    return run.report()


def verify_pascal(Mmax: int = 12, Nmax: int = 12, oracle_max: int = 8, budget=None) -> VerificationReport:
    """Both recurrences on closed-sum cells, and the count-level recurrences on
    enumeration tables up to ``oracle_max``."""
    run = _Run("pascal", {"Mmax": Mmax, "Nmax": Nmax, "oracle_max": oracle_max})

    def cell(M, N):
        return over_poly(M, N, Method.CLOSED_SUM)

    for M in range(1, Mmax + 1):
        for N in range(1, Nmax + 1):
            T = M * N
            lhs = _poly(cell(M, N), T)
            r1 = _poly(cell(M, N - 1), T) + (
                _poly(cell(M - 1, N), T) + _poly(cell(M - 1, N - 1), T)
            ).shift(N)
            r2 = _poly(cell(M - 1, N), T) + (
                _poly(cell(M, N - 1), T) + _poly(cell(M - 1, N - 1), T)
            ).shift(M)
            run.pair("step in N", lhs, r1, T, M=M, N=N)
            run.pair("step in M", lhs, r2, T, M=M, N=N)

    tables = {}

    def O(M, N, n):
        if n < 0:
            return 0
        if (M, N) not in tables:
            tables[M, N] = box_counts(M, N, budget=budget)
        return tables[M, N][n]

    for M in range(1, oracle_max + 1):
        for N in range(1, oracle_max + 1):
            for n in range(M * N + 1):
                run.equal("count step in N", O(M, N, n) - O(M, N - 1, n),
                          O(M - 1, N - 1, n - N) + O(M - 1, N, n - N), q=n, M=M, N=N)
                run.equal("count step in M", O(M, N, n) - O(M - 1, N, n),
                          O(M - 1, N - 1, n - M) + O(M, N - 1, n - M), q=n, M=M, N=N)
    return run.report()


def finite_limit_sum(j: int, T: int) -> QSeries:
    """``sum_{k=0}^{j} q^{k(k+1)/2} / ((q)_k (q)_{j-k})`` to ``q**T``."""
    terms = []
    for k in range(j + 1):
        e = k * (k + 1) // 2
        if e > T:
            break
        denom = poch(k, T) * poch(j - k, T)
        terms.append(qs_invert(denom).shift(e))
    return qs_sum(terms, T)


def verify_limit(j_list: Iterable[int] = range(6), N_list: Iterable[int] = (15, 20, 25),
                 T: int = 50, finite_jmax: int = 10) -> VerificationReport:
    """The box ``(N-j) x j`` matches ``(-q)_j/(q)_j`` up to ``q**(N-j)``; the
    finite sum identity holds to ``q**T`` for ``j <= finite_jmax``."""
    j_list, N_list = list(j_list), list(N_list)
    run = _Run("limit", {"j": j_list, "N": N_list, "T": T, "finite_jmax": finite_jmax})
    for j in j_list:
        for N in N_list:
            if N < j:
                continue
            w = N - j
            run.pair("box vs limit", _poly(over_poly(N - j, j), w), over_limit(j, w), w, j=j, N=N)
    for j in range(finite_jmax + 1):
        run.pair("finite sum", finite_limit_sum(j, T), over_limit(j, T), T, j=j)
    return run.report()


# ---------------------------------------------------------------------------
# part counts, divisors, Durfee sums, ranks


def _xq_ratio(n: float | int, X: int, T: int, num_sign: int, den_sign: int) -> XQSeries:
    """``(s1 xq)_n / (s2 xq)_n`` written with signs of the Pochhammer spec."""
    return xpoch(n, X, T, sign=num_sign) * xs_invert(xpoch(n, X, T, sign=den_sign))


def parts_gf_rhs(N: int, X: int, T: int) -> XQSeries:
    """``1 + sum_k z^k q^k (over[N+k-1, k] + over[N+k-2, k-1])``."""
    rows = {0: QSeries.one(T)}
    for k in range(1, X + 1):
        if k > T:
            break
        s = over_binom(N + k - 1, k, T) + over_binom(N + k - 2, k - 1, T)
        rows[k] = s.shift(k)
    return XQSeries.from_rows(rows, X, T)


def parts_limit_rhs(X: int, T: int) -> XQSeries:
    """``1 + 2 sum_k z^k q^k (-q)_{k-1} / (q)_k``."""
    rows = {0: QSeries.one(T)}
    for k in range(1, min(X, T) + 1):
        rows[k] = (2 * poch(k - 1, T, sign=-1) * qs_invert(poch(k, T))).shift(k)
    return XQSeries.from_rows(rows, X, T)


def verify_parts_gf(N: int, X: int = 6, T: int = 30, nmax: int = 20, budget=None) -> VerificationReport:
    """Overpartitions into parts ``<= N`` counted by number of parts."""
    if N < 1:
        raise DomainError("N must be positive")
    run = _Run("parts", {"N": N, "X": X, "T": T, "nmax": nmax})
    lhs = _xq_ratio(N, X, T, -1, 1)
    run.pair("product vs over q-binomials", lhs, parts_gf_rhs(N, X, T), T, X)
    # brute force pbar_N(n, k)
    top = min(T, nmax)
    brute = {}
    for n in range(top + 1):
        for p in partitions(n, N):
            key = (len(p), n)
            brute[key] = brute.get(key, 0) + (1 << len(set(p)))
    oracle = XQSeries(brute, X, top)
    run.pair("product vs enumeration", lhs.truncate(X, top), oracle, top, X)
    return run.report()


def verify_parts_limit(T: int = 20, nmax: int = 20, budget=None) -> VerificationReport:
    """``(-zq)_inf/(zq)_inf = 1 + 2 sum z^k q^k (-q)_{k-1}/(q)_k``, and its
    coefficients are the brute-force ``pbar(n, k)``."""
    X = T  # an overpartition of n <= T has at most T parts
    run = _Run("parts_limit", {"T": T, "nmax": nmax})
    lhs = _xq_ratio(INFINITY, X, T, -1, 1)
    rhs = parts_limit_rhs(X, T)
    run.pair("product vs sum", lhs, rhs, T, X)
    table = overpartition_part_counts(min(nmax, T), budget=budget)
    for (n, k), c in sorted(table.counts.items()):
        run.equal("pbar(n,k)", rhs.coeff(k, n), c, q=n, n=n, k=k)
    return run.report()


def verify_tau_congruence(nmax: int = 200) -> VerificationReport:
    """``pbar(n) = 2 tau(n) (mod 4)`` for ``1 <= n <= nmax``."""
    run = _Run("tau", {"nmax": nmax})
    pbar = overpartition_counts(nmax)
    for n in range(1, nmax + 1):
        run.equal("pbar mod 4", pbar[n] % 4, 2 * tau(n) % 4, q=n, n=n)
    return run.report()


def sylvester_S(N: float | int, X: int, T: int) -> XQSeries:
    """The Durfee-square sum; ``N`` may be :data:`INFINITY`."""
    terms = [XQSeries.one(X, T)]
    for j in range(1, X + 1):
        if j * j > T or j > N:
            break
        if N == INFINITY:
            c1, c2 = over_limit(j - 1, T), over_limit(j, T)
        else:
            c1, c2 = over_binom(N - 1, j - 1, T), over_binom(N, j, T)
        t1 = _xq_ratio(j - 1, X, T, -1, 1) * c1
        t2 = _xq_ratio(j, X, T, -1, 1) * c2
        mono = XQSeries.monomial(j, j * j, X, T)
        terms.append((t1 + t2) * mono)
    return xs_sum(terms, X, T)


def verify_sylvester(N: int, X: int = 6, T: int = 40) -> VerificationReport:
    if N < 1:
        raise DomainError("N must be positive")
    run = _Run("sylvester", {"N": N, "X": X, "T": T})
    run.pair("S vs product", sylvester_S(N, X, T), _xq_ratio(N, X, T, -1, 1), T, X)
    return run.report()


def verify_sylvester_limit(X: int = 6, T: int = 40) -> VerificationReport:
    run = _Run("sylvester_limit", {"X": X, "T": T})
    run.pair("S(inf) vs product", sylvester_S(INFINITY, X, T), _xq_ratio(INFINITY, X, T, -1, 1), T, X)
    return run.report()


def theta_series(T: int) -> QSeries:
    """``sum_{n in Z} (-1)^n q^{n^2}``."""
    c = {0: 1}
    n = 1
    while n * n <= T:
        c[n * n] = 2 * (-1) ** n
        n += 1
    return QSeries(c, T)


def verify_theta(T: int = 50) -> VerificationReport:
    """The ``x = -1`` case of the Sylvester-type limit, built in one variable."""
    run = _Run("theta", {"T": T})

    def ratio(j):
        # (-xq)_j/(xq)_j at x = -1 is (q)_j/(-q)_j
        return poch(j, T) * qs_invert(poch(j, T, sign=-1))

    terms = [QSeries.one(T)]
    j = 1
    while j * j <= T:
        t = over_limit(j - 1, T) * ratio(j - 1) + over_limit(j, T) * ratio(j)
        terms.append(((-1) ** j * t).shift(j * j))
        j += 1
    specialized = qs_sum(terms, T)
    quotient = poch(INFINITY, T) * qs_invert(poch(INFINITY, T, sign=-1))
    theta = theta_series(T)
    run.pair("sum vs theta", specialized, theta, T)
    run.pair("product vs theta", quotient, theta, T)
    return run.report()


def rank_gf(m: int, T: int) -> QSeries:
    """Rank generating function built from over q-binomials (``m >= 0``)."""
    if m < 0:
        raise DomainError("rank_gf needs m >= 0; use rank symmetry for m < 0")
    terms = [QSeries.monomial(m + 1, T, 2)]
    k = 2
    while 2 * k + m - 1 <= T:
        s = (
            over_binom(2 * k + m - 2, k - 1, T)
            + over_binom(2 * k + m - 3, k - 1, T)
            + over_binom(2 * k + m - 3, k - 2, T)
            + over_binom(2 * k + m - 4, k - 2, T)
        )
        terms.append(s.shift(2 * k + m - 1))
        k += 1
    return qs_sum(terms, T)


def lovejoy_rank_gf(m: int, T: int) -> QSeries:
    """``2 (-q)_inf/(q)_inf sum_{n>=1} (-1)^{n-1} q^{n^2+|m|n} (1-q^n)/(1+q^n)``."""
    m = abs(m)
    terms = []
    n = 1
    while n * n + m * n <= T:
        num = QSeries({0: 1, n: -1}, T)
        den = QSeries({0: 1, n: 1}, T)
        terms.append(((-1) ** (n - 1) * num * qs_invert(den)).shift(n * n + m * n))
        n += 1
    inner = qs_sum(terms, T)
    return 2 * poch(INFINITY, T, sign=-1) * qs_invert(poch(INFINITY, T)) * inner


def verify_rank(mmax: int = 5, T: int = 30, nmax: int = 30, budget=None) -> VerificationReport:
    """Over q-binomial formula, brute-force ranks and the known product formula agree."""
    run = _Run("rank", {"mmax": mmax, "T": T, "nmax": nmax})
    table = rank_counts(nmax, budget=budget)
    top = min(T, nmax)
    for m in range(mmax + 1):
        formula = rank_gf(m, T)
        run.pair("formula vs Lovejoy", formula, lovejoy_rank_gf(m, T), T, m=m)
        brute = QSeries({n: table[m, n] for n in range(1, top + 1)}, top)
        run.pair("formula vs enumeration", formula, brute, top, m=m)
    for n in range(1, nmax + 1):
        for m in range(1, n + 1):
            run.equal("rank symmetry", table[m, n], table[-m, n], q=n, m=m, n=n)
    return run.report()


# ---------------------------------------------------------------------------
# the Rogers-Ramanujan type theorem


def _coeff_for(N: float | int, j: int, T: int) -> QSeries:
    return over_limit(j, T) if N == INFINITY else over_binom(N, j, T)


def D_series(N: float | int, X: int, T: int) -> XQSeries:
    """``sum_j over[N, j] x^j q^{j(j+1)/2}``."""
    rows = {}
    for j in range(X + 1):
        e = j * (j + 1) // 2
        if j > N or e > T:
            break
        rows[j] = _coeff_for(N, j, T).shift(e)
    return XQSeries.from_rows(rows, X, T) if rows else XQSeries({}, X, T)


def C_series(N: float | int, X: int, T: int) -> XQSeries:
    """``sum_j over[N, j] (xq)_j/(-xq)_j (-1)^j x^{2j} (q^{j(2j+1)} - x q^{(j+1)(2j+1)})``."""
    terms = []
    j = 0
    while j <= N and 2 * j <= X and j * (2 * j + 1) <= T:
        inner = XQSeries(
            {(2 * j, j * (2 * j + 1)): (-1) ** j, (2 * j + 1, (j + 1) * (2 * j + 1)): -(-1) ** j},
            X,
            T,
        )
        terms.append(_xq_ratio(j, X, T, 1, -1) * inner * _coeff_for(N, j, T))
        j += 1
    return xs_sum(terms, X, T)


def g_series(N: float | int, X: int, T: int) -> XQSeries:
    """``(xq)_N / (-xq)_N * D(N, x)``."""
    return _xq_ratio(N, X, T, 1, -1) * D_series(N, X, T)


def _recurrence_rhs(f: Callable[[int], XQSeries], N: int, X: int, T: int) -> XQSeries:
    """``(1 - xq) f(N-1)(xq) + (xq)_2/(-xq)_2 x q^2 f(N-2)(xq^2)``."""
    one_minus = XQSeries({(0, 0): 1, (1, 1): -1}, X, T)
    second = _xq_ratio(2, X, T, 1, -1) * XQSeries.monomial(1, 2, X, T)
    return one_minus * xs_substitute_scale(f(N - 1), 1) + second * xs_substitute_scale(f(N - 2), 2)


def _min_q(s: XQSeries) -> int | None:
    return min((b for (_a, b) in s.coeffs), default=None)


def verify_key_theorem(N_list: Iterable[int] = range(2, 11), X: int = 8, Tpad: int = 20,
                       T_x1: int = 60, limit_window: tuple[int, int] = (8, 30)) -> VerificationReport:
    """The ``g`` recurrence (exact), the ``C`` recurrence and ``g - C``
    memberships in ``x^2 q^{N+3} Z[[x, q]]``, the ``N -> inf`` limit and the ``x = 1`` case."""
    N_list = list(N_list)
    for N in N_list:
        if N < 2:
            raise DomainError("the g and C recurrences need N >= 2")
    run = _Run("key", {"N": N_list, "X": X, "Tpad": Tpad, "T_x1": T_x1})
    orders = {}
    for N in N_list:
        T = N + Tpad
        cache: dict[tuple[str, int], XQSeries] = {}

        def g(n, T=T, cache=cache):
            return cache.setdefault(("g", n), g_series(n, X, T))

        def C(n, T=T, cache=cache):
            return cache.setdefault(("C", n), C_series(n, X, T))

        run.pair("g recurrence", g(N), _recurrence_rhs(g, N, X, T), T, X, N=N)
        rec_c = C(N) - _recurrence_rhs(C, N, X, T)
        run.membership("C recurrence", rec_c, 2, N + 3, N=N)
        diff = g(N) - C(N)
        run.membership("g - C", diff, 2, N + 3, N=N)
        orders[str(N)] = {"C_recurrence_min_q": _min_q(rec_c), "g_minus_C_min_q": _min_q(diff)}
    run.info["observed_min_q_order"] = orders

    Xc, Tc = limit_window
    lhs = _xq_ratio(INFINITY, Xc, Tc, 1, -1) * D_series(INFINITY, Xc, Tc)
    run.pair("N=inf limit", lhs, C_series(INFINITY, Xc, Tc), Tc, Xc)

    T1 = T_x1
    d_at_one = qs_sum(
        (over_limit(j, T1).shift(j * (j + 1) // 2) for j in range(T1 + 1) if j * (j + 1) // 2 <= T1),
        T1,
    )
    x1 = poch(INFINITY, T1) * qs_invert(poch(INFINITY, T1, sign=-1)) * d_at_one
    bilateral = {}
    for n in range(-T1, T1 + 1):
        e = n * (2 * n + 1)
        if 0 <= e <= T1:
            bilateral[e] = bilateral.get(e, 0) + (-1) ** n
    bilateral_s = QSeries(bilateral, T1)
    run.pair("x=1 sum vs bilateral", x1, bilateral_s, T1)
    run.pair("bilateral vs product", bilateral_s, qs_product_modular((1, 3, 4), 4, T1), T1)
    return run.report()


def rr_sum(T: int) -> QSeries:
    """``sum_k q^{k(k+1)/2} (-q)_k / (q)_k``."""
    terms = []
    k = 0
    while k * (k + 1) // 2 <= T:
        terms.append(over_limit(k, T).shift(k * (k + 1) // 2))
        k += 1
    return qs_sum(terms, T)


def verify_rr(nmax: int = 60, T: int = 60, budget=None) -> VerificationReport:
    """``A(n) = B(n) = C(n)`` by enumeration, plus the series identity behind it."""
    run = _Run("rr", {"nmax": nmax, "T": T})
    counts = gap_congruence_counts(nmax, budget=budget)
    A, B, C = counts["A"], counts["B"], counts["C"]
    for n in range(nmax + 1):
        run.equal("A = B", A[n], B[n], q=n, n=n)
        run.equal("B = C", B[n], C[n], q=n, n=n)
    b_gf = poch(INFINITY, T, sign=-1) * qs_invert(qs_product_modular((2,), 4, T))
    c_gf = qs_invert(qs_product_modular((1, 2, 3), 4, T))
    top = min(nmax, T)
    run.pair("B vs product", QSeries({n: B[n] for n in range(top + 1)}, top), b_gf, top)
    run.pair("C vs product", QSeries({n: C[n] for n in range(top + 1)}, top), c_gf, top)
    s = rr_sum(T)
    run.pair("sum vs product", s, c_gf, T)
    run.pair("sum vs A", s, QSeries({n: A[n] for n in range(top + 1)}, top), top)
    run.info["table"] = [[n, A[n], B[n], C[n]] for n in range(nmax + 1)]
    return run.report()


# ---------------------------------------------------------------------------
# suites


def _suite_parts(N_max=8, X=6, T=30, nmax=20):
    return [verify_parts_gf(N, X, T, nmax) for N in range(1, N_max + 1)] + [
        verify_parts_limit(nmax, nmax)
    ]


def _suite_sylvester(N_max=10, X=6, T=40, T_theta=50):
    return (
        [verify_sylvester(N, X, T) for N in range(1, N_max + 1)]
        + [verify_sylvester_limit(X, T), verify_theta(T_theta)]
    )


SUITES: dict[str, Callable[..., list[VerificationReport]]] = {
    "overg": lambda Mmax=8, Nmax=8: [verify_overG(Mmax, Nmax)],
    "pascal": lambda Mmax=12, Nmax=12, oracle_max=8: [verify_pascal(Mmax, Nmax, oracle_max)],
    "limit": lambda T=50: [verify_limit(range(6), (15, 20, 25), T, 10)],
    "parts": _suite_parts,
    "tau": lambda nmax=200: [verify_tau_congruence(nmax)],
    "sylvester": _suite_sylvester,
    "rank": lambda mmax=5, T=30, nmax=30: [verify_rank(mmax, T, nmax)],
    "key": lambda N_list=range(2, 11), X=8, Tpad=20: [verify_key_theorem(N_list, X, Tpad)],
    "rr": lambda nmax=60, T=60: [verify_rr(nmax, T)],
}


def run_suite(name: str, **params) -> list[VerificationReport]:
    """Run one named suite (or ``"all"``) with its default windows."""
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key]())
        return out
    return SUITES[name](**params)
