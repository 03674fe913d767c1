"""
Classification of a hypersurface germ f by the relation type of its
Jacobian ideal.

Notation: J = (f_1..f_n) is the gradient ideal, I = J + (f) the Jacobian
ideal, J_i = (f_1..f_i) the partial chain and f_{n+1} = f. All vanishing
statements are local at the origin unless ``local=False`` is passed.
"""

# Standard library imports
import concurrent.futures
import dataclasses
from dataclasses import dataclass
import logging
import threading

# Local application/library specific imports
from config.constants import (
    ANALYSIS_STEPS,
    CROSS_VALIDATION_CHECKS,
    DEFAULT_ANALYSIS_CONFIG,
    EXPECTED_JACOBIAN_TYPE,
    LINEAR_JACOBIAN_TYPE,
    NEITHER,
)
from ideal_ops import (
    Ideal,
    ideal_colon,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_scale,
    ideal_sum,
    member,
    same_ideal,
    subset,
)
from poly import evaluate_at_origin, is_unit_at_origin, partial_derivative, total_degree
from rees import (
    default_presentation_names,
    extract_top_equation,
    rees_ideal,
    relation_type_local,
)
from utils.time_utils import StageTimer
from utils.validation_utils import (
    BoundExceededError,
    TheoremCheckError,
    UsageError,
    require,
    validate_bound,
)

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@dataclass
class DivisorData:
    """
    A germ f with its partials, gradient ideal J, Jacobian ideal I and the
    partial chain J_0 = 0 ⊂ J_1 ⊂ ... ⊂ J_n = J.

    Powers, products and colon ideals are memoized here so that the
    Groebner bases cached on them are shared by every test.
    """

    ring: object
    f: object
    partials: tuple
    gradient: Ideal
    jacobian: Ideal
    chain: tuple
    _memo: dict = dataclasses.field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = dataclasses.field(
        default_factory=threading.Lock, repr=False, compare=False
    )

    @property
    def n(self):
        return len(self.partials)

    @property
    def is_smooth(self):
        """f in m \\ m^2, i.e. some partial is a unit at the origin."""
        return any(is_unit_at_origin(p) for p in self.partials)

    def generator(self, i):
        """f_i for 1 <= i <= n, and f for i = n + 1."""
        if not 1 <= i <= self.n + 1:
            raise UsageError(f"generator index {i} outside 1..{self.n + 1}")
        return self.partials[i - 1] if i <= self.n else self.f

    def _remember(self, key, compute):
        """Memoized compute(); shared by the T-table worker threads."""
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    def jacobian_power(self, k):
        """I^k, with I^0 = (1)."""
        return self._remember(("I^", k), lambda: ideal_power(self.jacobian, k))

    def chain_times_power(self, i, k):
        """J_i * I^k; for k < 0 this is J_i itself."""
        if k <= 0:
            return self.chain[i]
        return self._remember(
            ("J_i I^k", i, k), lambda: ideal_product(self.chain[i], self.jacobian_power(k))
        )

    def gradient_times_power(self, k):
        return self.chain_times_power(self.n, k)

    def f_power(self, k):
        return self._remember(("f^", k), lambda: self.f**k)

    def effective_colon(self, d):
        """(J I^(d-1) : f^d); d = 1 gives (J : f)."""
        return self._remember(
            ("eq colon", d),
            lambda: ideal_colon(self.gradient_times_power(d - 1), self.f_power(d)),
        )

    def t_numerator(self, i, d):
        """(J_{i-1} I^(d-1) : f_i) ∩ I^(d-1); for d = 1 just (J_{i-1} : f_i)."""

        def compute():
            colon = ideal_colon(self.chain_times_power(i - 1, d - 1), self.generator(i))
            if d == 1:
                return colon
            return ideal_intersect(colon, self.jacobian_power(d - 1))

        return self._remember(("T numerator", i, d), compute)

    def t_denominator(self, i, d):
        """J_{i-1} I^(d-2), read as J_{i-1} when d <= 2."""
        return self.chain_times_power(i - 1, d - 2)


def build_divisor(f, ring):
    """
    Build the DivisorData of a germ f.

    Args:
        f (Polynomial): The germ, with zero constant term.
        ring (PolyRing): Its ring.

    Returns:
        DivisorData: f, partials, J, I and the chain J_0..J_n.

    Raises:
        UsageError: For f = 0, a nonzero constant term, or a prime field
            whose characteristic does not exceed deg f.
    """
    f = ring.coerce(f)
    if not f:
        raise UsageError("f must be a nonzero polynomial")
    if evaluate_at_origin(f):
        raise UsageError("not a germ through the origin: f has a nonzero constant term")
    degree = total_degree(f)
    if ring.field.is_prime_field and ring.field.characteristic <= degree:
        raise UsageError(
            f"characteristic {ring.field.characteristic} must exceed deg f = {degree}"
        )
    partials = tuple(partial_derivative(f, i) for i in range(ring.arity))
    gradient = Ideal(ring, partials)
    jacobian = Ideal(ring, partials + (f,))
    chain = tuple(Ideal(ring, partials[:i]) for i in range(ring.arity + 1))
    logger.info(f"Built divisor data for f of degree {degree} in {ring}")
    return DivisorData(ring, f, partials, gradient, jacobian, chain)


@dataclass(frozen=True)
class TTable:
    """
    Vanishing of T_{i,d} for the rows and degrees that were computed.

    ``entries[(i, d)]`` is True when T_{i,d} vanishes. Entries exist only
    within 1 <= d <= dmax.
    """

    entries: dict
    dmax: int
    rows: tuple

    def is_zero(self, i, d):
        return self.entries[(i, d)]

    def has(self, i, d):
        return (i, d) in self.entries

    def nonzero_entries(self):
        return sorted(key for key, vanishes in self.entries.items() if not vanishes)

    def row_zero(self, i, degrees):
        return all(self.entries.get((i, d), False) for d in degrees)

    def as_dict(self):
        table = {}
        for (i, d), vanishes in sorted(self.entries.items()):
            table.setdefault(str(i), {})[str(d)] = "zero" if vanishes else "nonzero"
        return table


def t_vanishes(data, i, d, local=True):
    """
    Whether T_{i,d} = ((J_{i-1} I^(d-1) : f_i) ∩ I^(d-1)) / J_{i-1} I^(d-2)
    vanishes; for d = 1 the test is (J_{i-1} : f_i) ⊆ J_{i-1}.
    """
    if not 1 <= i <= data.n + 1:
        raise UsageError(f"row {i} outside 1..{data.n + 1}")
    validate_bound("d", d, 1)
    vanishes = data._remember(
        ("T", i, d, local),
        lambda: subset(data.t_numerator(i, d), data.t_denominator(i, d), local=local),
    )
    logger.debug(f"T_{i},{d} vanishes: {vanishes}")
    return vanishes


def compute_t_table(data, dmax, rows=None, local=True, workers=1):
    """
    Fill a TTable for the given rows (default 1..n+1) and 1 <= d <= dmax.

    Entries are independent; with workers > 1 they run on a thread pool.
    """
    rows = tuple(rows) if rows else tuple(range(1, data.n + 2))
    keys = [(i, d) for i in rows for d in range(1, dmax + 1)]
    entries = {}
    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(t_vanishes, data, i, d, local): (i, d) for i, d in keys}
            for future in concurrent.futures.as_completed(futures):
                entries[futures[future]] = future.result()
    else:
        for i, d in keys:
            entries[(i, d)] = t_vanishes(data, i, d, local=local)
    nonzero = sorted(k for k, v in entries.items() if not v)
    logger.info(f"T-table rows {rows} up to d = {dmax}: nonzero at {nonzero}")
    return TTable(dict(sorted(entries.items())), dmax, rows)


def regular_sequence_check(data, local=True):
    """f_1..f_n is a regular sequence iff T_{i,1} = 0 for i = 1..n."""
    return all(t_vanishes(data, i, 1, local=local) for i in range(1, data.n + 1))


def euler_check(data, local=True):
    """f ∈ J (locally): an Euler vector field with χ(f) = f exists."""
    inside, _ = member(data.f, data.gradient, local=local)
    return inside


def _search_power(data, target_ideal, max_r, quantity, local):
    validate_bound("max_r", max_r, 1)
    for r in range(1, max_r + 1):
        inside, witness = member(data.f_power(r), target_ideal(r), local=local)
        if inside:
            logger.info(f"{quantity} = {r}")
            return r, witness
    raise BoundExceededError(quantity, max_r)


def r_of_f_with_witness(data, max_r=DEFAULT_ANALYSIS_CONFIG["MAX_R"], local=True):
    return _search_power(data, lambda r: data.gradient, max_r, "r(f)", local)


def r_of_f(data, max_r=DEFAULT_ANALYSIS_CONFIG["MAX_R"], local=True):
    """
    r(f) = min{r >= 1 : f^r ∈ J}.

    Raises:
        BoundExceededError: If no r <= max_r works.
    """
    return r_of_f_with_witness(data, max_r, local)[0]


def id_of_f_with_witness(
    data, max_r=DEFAULT_ANALYSIS_CONFIG["MAX_R"], local=True, check_monotone=True
):
    r, witness = _search_power(
        data, lambda r: data.gradient_times_power(r - 1), max_r, "id(f)", local
    )
    if check_monotone:
        inside, _ = member(data.f_power(r + 1), data.gradient_times_power(r), local=local)
        require(inside, f"f^{r + 1} must lie in J I^{r} once f^{r} lies in J I^{r - 1}")
    return r, witness


def id_of_f(data, max_r=DEFAULT_ANALYSIS_CONFIG["MAX_R"], local=True, check_monotone=True):
    """id(f) = min{r >= 1 : f^r ∈ J I^(r-1)}."""
    return id_of_f_with_witness(data, max_r, local, check_monotone)[0]


def reduction_number(data, max_r=DEFAULT_ANALYSIS_CONFIG["MAX_R"], local=True, check_monotone=True):
    """
    rn_J(I) = min{r >= 0 : I^(r+1) = J I^r}.

    J is a reduction of I for any germ, so the loop ends; max_r guards it.

    Raises:
        BoundExceededError: If no r <= max_r works.
    """
    validate_bound("max_r", max_r, 1)
    for r in range(0, max_r + 1):
        if same_ideal(data.jacobian_power(r + 1), data.gradient_times_power(r), local=local):
            if check_monotone:
                stable = subset(
                    data.jacobian_power(r + 2), data.gradient_times_power(r + 1), local=local
                )
                require(stable, f"I^{r + 2} must equal J I^{r + 1} once I^{r + 1} = J I^{r}")
            logger.info(f"rn_J(I) = {r}")
            return r
    raise BoundExceededError("rn_J(I)", max_r)


def effective_quotient_vanishes(data, d, local=True):
    """
    Whether (J I^(d-1) : f^d) / (J I^(d-2) : f^(d-1)) vanishes; the reverse
    inclusion always holds, so this is one local inclusion test.
    """
    validate_bound("d", d, 2)
    return data._remember(
        ("EQ", d, local),
        lambda: subset(data.effective_colon(d), data.effective_colon(d - 1), local=local),
    )


def left_term_vanishes(data, d, local=True):
    """
    Plane curves only: whether
    ((f_1 I^(d-1) : f_2) ∩ I^(d-1)) / (f [(f_1 I^(d-2) : f_2) ∩ I^(d-2)] + f_1 I^(d-2))
    vanishes.
    """
    if data.n != 2:
        raise UsageError("the left-term test is defined for two variables")
    validate_bound("d", d, 2)
    def compute():
        numerator = data.t_numerator(2, d)
        denominator = ideal_sum(
            ideal_scale(data.t_numerator(2, d - 1), data.f), data.chain_times_power(1, d - 2)
        )
        return subset(numerator, denominator, local=local)

    return data._remember(("left", d, local), compute)


def colon_hypothesis_holds(data, local=True):
    """(f_1 : f_2) ⊆ (f_1 : f), the extra hypothesis of the plane-curve equivalence."""
    f1 = Ideal(data.ring, [data.partials[0]])
    return subset(ideal_colon(f1, data.partials[1]), ideal_colon(f1, data.f), local=local)


@dataclass
class AnalysisReport:
    """Everything classify computed about one germ."""

    field: object
    local: bool
    smooth: bool
    dmax: int
    r_of_f: int = None
    id_of_f: int = None
    rn: int = None
    rt: int = None
    rt_gradient: int = None
    verdict: str = None
    linear_jacobian_type: bool = None
    expected_jacobian_type: bool = None
    euler_homogeneous: bool = None
    regular_sequence: bool = None
    t_table: TTable = None
    effective_quotients: dict = dataclasses.field(default_factory=dict)
    left_terms: dict = dataclasses.field(default_factory=dict)
    colon_j_f: tuple = ()
    presentation: object = None
    rees_evidence: object = None
    gradient_evidence: object = None
    top_equation: object = None
    witnesses: dict = dataclasses.field(default_factory=dict)
    diagnostics: list = dataclasses.field(default_factory=list)
    timings: dict = dataclasses.field(default_factory=dict)

    def effective_vanishes(self, d):
        """E(I)_d = 0, read off the Rees evidence."""
        return self.rees_evidence.effective_vanishes(d)

    def verified_range(self):
        return f"verified for d <= {self.dmax}"


def _verdict(rt, rt_gradient, rn):
    if None in (rt, rt_gradient, rn):
        return None, None, None
    linear = rt == 1
    expected = rt_gradient == 1 and rt == rn + 1
    if linear:
        verdict = LINEAR_JACOBIAN_TYPE
    elif expected:
        verdict = EXPECTED_JACOBIAN_TYPE
    else:
        verdict = NEITHER
    return verdict, linear, expected


def _smooth_report(data, local, timer):
    logger.info("f is smooth at the origin: I = (1) locally, linear type")
    with timer.stage("invariants"):
        euler = euler_check(data, local=local)
        regular = regular_sequence_check(data, local=local)
    return AnalysisReport(
        field=data.ring.field,
        local=local,
        smooth=True,
        dmax=0,
        r_of_f=1,
        id_of_f=1,
        rn=0,
        rt=1,
        rt_gradient=1,
        verdict=LINEAR_JACOBIAN_TYPE,
        linear_jacobian_type=True,
        expected_jacobian_type=True,
        euler_homogeneous=euler,
        regular_sequence=regular,
        t_table=TTable({}, 0, ()),
        timings=timer.as_dict(),
    )


def classify(
    data,
    dmax=None,
    max_r=DEFAULT_ANALYSIS_CONFIG["MAX_R"],
    local=DEFAULT_ANALYSIS_CONFIG["LOCAL"],
    rows=DEFAULT_ANALYSIS_CONFIG["T_ROWS"],
    workers=DEFAULT_ANALYSIS_CONFIG["WORKERS"],
    steps=ANALYSIS_STEPS,
    timer=None,
):
    """
    Run the full classification pipeline on a DivisorData.

    Args:
        data (DivisorData): The germ.
        dmax (int, optional): Last degree of the T-table; defaults to
            max(8, rt + 3).
        max_r (int): Bound for the r(f), id(f) and rn loops.
        local (bool): Germ semantics (True) or global semantics.
        rows (Sequence[int], optional): T-table rows; defaults to 1..n+1.
        workers (int): Threads for the T-table.
        steps (Iterable[str]): Subset of ANALYSIS_STEPS to run. "rn" is the
            reduction number, "rt" the Rees presentations, "t_table" the
            T-table with the effective quotients, "classify" the verdict
            and "top_equation" the top-degree equation (needs "rt").
        timer (StageTimer, optional): Receives the per-stage timings.

    Returns:
        AnalysisReport: Invariants, verdict, tables and evidence. Loop
        bounds that are hit, and steps that were not run, leave the affected
        fields as None; bounds also add a diagnostic.

    Raises:
        UsageError: For an unknown step name.
    """
    steps = set(steps)
    unknown = steps - set(ANALYSIS_STEPS)
    if unknown:
        raise UsageError(f"unknown steps {sorted(unknown)}; choose from {ANALYSIS_STEPS}")
    if dmax is not None:
        validate_bound("dmax", dmax, 2)
    timer = timer or StageTimer()
    if data.is_smooth:
        return _smooth_report(data, local, timer)

    report = AnalysisReport(field=data.ring.field, local=local, smooth=False, dmax=0)

    with timer.stage("invariants"):
        report.euler_homogeneous = euler_check(data, local=local)
        report.regular_sequence = regular_sequence_check(data, local=local)
        for name, compute in (
            ("r_of_f", r_of_f_with_witness),
            ("id_of_f", id_of_f_with_witness),
        ):
            try:
                value, witness = compute(data, max_r=max_r, local=local)
                setattr(report, name, value)
                report.witnesses[name] = witness
            except BoundExceededError as e:
                report.diagnostics.append(str(e))
                logger.warning(f"Bound exceeded: {e}")
        if "rn" in steps:
            try:
                report.rn = reduction_number(data, max_r=max_r, local=local)
            except BoundExceededError as e:
                report.diagnostics.append(str(e))
                logger.warning(f"Bound exceeded: {e}")

    if "rt" in steps:
        with timer.stage("rees"):
            names = default_presentation_names(data.n + 1, data.ring.variable_names, f_slot=True)
            report.presentation = rees_ideal(list(data.partials) + [data.f], data.ring, names)
            report.rees_evidence = relation_type_local(report.presentation, local=local)
            report.rt = report.rees_evidence.relation_type
            gradient_presentation = rees_ideal(list(data.partials), data.ring, names[:-1])
            report.gradient_evidence = relation_type_local(gradient_presentation, local=local)
            report.rt_gradient = report.gradient_evidence.relation_type
        logger.info(f"rt(I) = {report.rt}, rt(J) = {report.rt_gradient}")

    report.dmax = dmax or DEFAULT_ANALYSIS_CONFIG["DMAX_FLOOR"]
    if dmax is None and report.rt is not None:
        report.dmax = max(report.dmax, report.rt + DEFAULT_ANALYSIS_CONFIG["DMAX_MARGIN"])
    if "classify" in steps:
        report.verdict, report.linear_jacobian_type, report.expected_jacobian_type = _verdict(
            report.rt, report.rt_gradient, report.rn
        )

    if "t_table" in steps:
        with timer.stage("t_table"):
            report.t_table = compute_t_table(
                data, report.dmax, rows=rows, local=local, workers=workers
            )

        with timer.stage("effective_quotients"):
            report.colon_j_f = data.effective_colon(1).generators
            for d in range(2, report.dmax + 1):
                report.effective_quotients[d] = effective_quotient_vanishes(data, d, local=local)
                if data.n == 2 and data.partials[0]:
                    report.left_terms[d] = left_term_vanishes(data, d, local=local)

    if "top_equation" in steps and report.id_of_f is not None:
        if report.presentation is None:
            report.diagnostics.append("top equation needs the Rees presentation (step rt)")
        else:
            with timer.stage("top_equation"):
                report.top_equation = extract_top_equation(
                    report.presentation, data, report.id_of_f, local=local
                )

    report.timings = timer.as_dict()
    logger.info(f"Verdict: {report.verdict} ({report.verified_range()})")
    return report


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one theorem-backed check: "pass", "fail" or "skipped"."""

    name: str
    status: str
    detail: str = ""

    @property
    def statement(self):
        return CROSS_VALIDATION_CHECKS[self.name]


def _check(name, condition, detail=""):
    return CheckResult(name, "pass" if condition else "fail", detail)


def _skip(name, reason):
    return CheckResult(name, "skipped", reason)


def _degreewise(report, degrees, name):
    mismatched = [
        d for d in degrees if report.effective_vanishes(d) != report.effective_quotients[d]
    ]
    if not degrees:
        return _skip(name, "hypothesis holds in no computed degree")
    detail = f"degrees {list(degrees)}" + (f"; disagree at {mismatched}" if mismatched else "")
    return _check(name, not mismatched, detail)


def cross_validate(data, report, strict=True, metadata=None):
    """
    Check the computed invariants against the theorems relating them.

    Args:
        data (DivisorData): The germ.
        report (AnalysisReport): Output of classify.
        strict (bool): Raise on any failure.
        metadata (dict, optional): Published values; "L" enables the
            bound check against L(f).

    Returns:
        list[CheckResult]: One result per check, in a fixed order.

    Raises:
        TheoremCheckError: If strict and some check fails.
    """
    metadata = metadata or {}
    results = []
    rn, rt, r, idf = report.rn, report.rt, report.r_of_f, report.id_of_f

    def known(*values):
        return all(v is not None for v in values)

    results.append(
        _check("reduction_bound", rn + 1 <= rt, f"rn = {rn}, rt = {rt}")
        if known(rn, rt)
        else _skip("reduction_bound", "rn or rt unknown")
    )
    results.append(
        _check("id_equals_rn_plus_one", idf == rn + 1, f"id = {idf}, rn = {rn}")
        if known(idf, rn)
        else _skip("id_equals_rn_plus_one", "id or rn unknown")
    )
    results.append(
        _check("r_at_most_id", r <= idf, f"r = {r}, id = {idf}")
        if known(r, idf)
        else _skip("r_at_most_id", "r or id unknown")
    )

    table_checks = (
        "finite_range_expected_type",
        "degreewise_quotient",
        "colon_equivalence",
        "left_term_sequence",
        "effective_surjection",
        "t_first_row_zero",
    )
    if report.smooth:
        results.extend(_skip(name, "smooth germ") for name in table_checks)
    elif report.t_table is None or report.rees_evidence is None:
        results.extend(_skip(name, "T-table or Rees step not run") for name in table_checks)
    else:
        table = report.t_table
        degrees = range(2, report.dmax + 1)
        gradient_rows = range(1, data.n + 1)
        all_zero = all(table.row_zero(i, degrees) for i in gradient_rows)
        if not known(rn, rt):
            results.append(_skip("finite_range_expected_type", "rn or rt unknown"))
        elif all_zero and report.dmax >= rt + 1:
            results.append(
                _check(
                    "finite_range_expected_type",
                    rt == rn + 1,
                    f"T_(i,d) = 0 for i <= {data.n}, 2 <= d <= {report.dmax}",
                )
            )
        else:
            results.append(_skip("finite_range_expected_type", "T-table hypothesis not met"))

        zero_degrees = [
            d
            for d in degrees
            if all(table.has(i, d) and table.is_zero(i, d) for i in gradient_rows)
        ]
        results.append(_degreewise(report, zero_degrees, "degreewise_quotient"))

        if data.n == 2 and data.partials[0] and colon_hypothesis_holds(data, local=report.local):
            prefix = []
            for d in degrees:
                if not (table.has(2, d) and table.is_zero(2, d)):
                    break
                prefix.append(d)
            results.append(_degreewise(report, prefix, "colon_equivalence"))
        else:
            results.append(_skip("colon_equivalence", "needs n = 2 and (f_1:f_2) ⊆ (f_1:f)"))

        if report.left_terms:
            mismatched = [
                d
                for d in degrees
                if report.effective_vanishes(d)
                != (report.left_terms[d] and report.effective_quotients[d])
            ]
            detail = f"disagree at {mismatched}" if mismatched else ""
            results.append(_check("left_term_sequence", not mismatched, detail))
        else:
            results.append(_skip("left_term_sequence", "needs n = 2 and f_1 != 0"))

        broken = [
            d
            for d in degrees
            if report.effective_vanishes(d) and not report.effective_quotients[d]
        ]
        results.append(
            _check("effective_surjection", not broken, f"fails at {broken}" if broken else "")
        )
        nonzero_first = [
            d for d in range(1, report.dmax + 1) if table.has(1, d) and not table.is_zero(1, d)
        ]
        detail = f"nonzero at {nonzero_first}" if nonzero_first else ""
        results.append(_check("t_first_row_zero", not nonzero_first, detail))

    if report.verdict is None:
        results.append(_skip("verdict_logic", "no verdict"))
    else:
        consistent = (
            (not report.linear_jacobian_type or report.expected_jacobian_type)
            and (not report.expected_jacobian_type or rt == rn + 1)
            and report.linear_jacobian_type == (rt == 1)
        )
        results.append(_check("verdict_logic", consistent, f"verdict = {report.verdict}"))

    top = report.top_equation
    if top is None:
        results.append(_skip("top_equation", "not extracted"))
    else:
        results.append(
            _check(
                "top_equation",
                top.verified and top.degree == idf and (top.monic or is_unit_at_origin(top.unit)),
                f"degree {top.degree}, monic = {top.monic}",
            )
        )

    published = metadata.get("L")
    if published is None or not known(idf):
        results.append(_skip("published_bound", "no published L(f)"))
    else:
        published = int(published)
        ok = idf <= published and (not report.expected_jacobian_type or rt <= published)
        results.append(_check("published_bound", ok, f"L(f) = {published}, id = {idf}, rt = {rt}"))

    failures = [result for result in results if result.status == "fail"]
    for failure in failures:
        logger.error(f"Check {failure.name} failed: {failure.statement} ({failure.detail})")
    if failures and strict:
        raise TheoremCheckError(failures)
    return results
