"""
Command-line front end: problem ingestion, single analyses, parameter
sweeps over families and the bundled corpus runner. Every run produces a
JSON report document.
"""

# Standard library imports
import argparse
import concurrent.futures
import configparser
from contextlib import contextmanager
import dataclasses
from dataclasses import dataclass, replace
import logging
import sys

# Related third-party imports
from tqdm import tqdm

# Local application/library specific imports
from config.constants import (
    ANALYSIS_STEPS,
    CHECK_NAMES,
    CORPUS_PATH,
    CROSS_VALIDATION_CHECKS,
    DEFAULT_ANALYSIS_CONFIG,
    DEFAULT_FIELD,
    DEFAULT_WORKERS,
    EXIT_CODES,
    GLOBAL_SEMANTICS_LABEL,
    LOCAL_SEMANTICS_LABEL,
    SCHEMA_VERSION,
    SLOW_TAG,
    STAGES,
    TOOL_VERSION,
    VERDICTS,
)
from coeffs import FieldSpec
from ideal_ops import Ideal, same_ideal
from jacobian_analysis import build_divisor, classify, cross_validate
from poly import PolyRing, parse_polynomial, render_polynomial
from utils import data_utils, string_utils
from utils.logging_utils import setup_file_logger, set_verbosity
from utils.time_utils import StageTimer, format_duration
from utils.utils import parse_index_ranges, split_list
from utils.validation_utils import IdentityCheckError, UsageError, validate_bound

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

PROBLEM_KEYS = ("name", "vars", "field", "f", "dmax", "max_r", "checks", "parameters", "tags")
EXPECTATION_FIELDS = (
    "rt",
    "rn",
    "rt_gradient",
    "verdict",
    "euler",
    "regular_sequence",
    "t_zero",
    "t_nonzero",
    "colon_j_f",
)
DEFAULT_SECTION = "problem"


@dataclass(frozen=True)
class ProblemSpec:
    """
    One analysis request, as read from a problem file or corpus section.

    ``constants`` holds the parameter values of an instantiated family
    member; ``metadata`` is carried verbatim into the report.
    """

    name: str
    variables: tuple
    field: str
    f: str
    dmax: int = None
    max_r: int = DEFAULT_ANALYSIS_CONFIG["MAX_R"]
    checks: tuple = CHECK_NAMES
    parameters: tuple = ()
    tags: tuple = ()
    metadata: dict = dataclasses.field(default_factory=dict)
    expectations: dict = dataclasses.field(default_factory=dict)
    constants: dict = dataclasses.field(default_factory=dict)
    local: bool = DEFAULT_ANALYSIS_CONFIG["LOCAL"]

    def __post_init__(self):
        if not self.variables:
            raise UsageError(f"problem {self.name!r} declares no variables")
        if not self.f.strip():
            raise UsageError(f"problem {self.name!r} has an empty f")
        FieldSpec.from_text(self.field)
        if self.dmax is not None:
            validate_bound("dmax", self.dmax, 2)
        validate_bound("max_r", self.max_r, 1)
        unknown = set(self.checks) - set(CHECK_NAMES)
        if unknown:
            raise UsageError(f"unknown checks {sorted(unknown)}; choose from {CHECK_NAMES}")
        unknown = set(self.expectations) - set(EXPECTATION_FIELDS)
        if unknown:
            raise UsageError(f"unknown expectations {sorted(unknown)}")

    @classmethod
    def from_mapping(cls, mapping, name=None):
        """
        Build a spec from the key = value pairs of one problem section.

        Raises:
            UsageError: On unknown keys, missing vars/f or invalid values.
        """
        values, metadata, expectations = {}, {}, {}
        for key, value in mapping.items():
            value = value.strip()
            if key.startswith("meta."):
                metadata[key[len("meta."):]] = value
            elif key.startswith("expect."):
                expectations[key[len("expect."):]] = value
            elif key in PROBLEM_KEYS:
                values[key] = value
            else:
                raise UsageError(f"unknown problem key {key!r}")
        for required in ("vars", "f"):
            if required not in values:
                raise UsageError(f"problem {name or values.get('name')!r} is missing {required!r}")
        try:
            dmax = int(values["dmax"]) if values.get("dmax") else None
            max_r = int(values.get("max_r") or DEFAULT_ANALYSIS_CONFIG["MAX_R"])
        except ValueError as e:
            raise UsageError(f"dmax and max_r must be integers: {e}")
        return cls(
            name=values.get("name") or name or DEFAULT_SECTION,
            variables=tuple(split_list(values["vars"])),
            field=values.get("field") or DEFAULT_FIELD,
            f=" ".join(values["f"].split()),
            dmax=dmax,
            max_r=max_r,
            checks=tuple(split_list(values["checks"])) if values.get("checks") else CHECK_NAMES,
            parameters=tuple(split_list(values.get("parameters", ""))),
            tags=tuple(split_list(values.get("tags", ""))),
            metadata=metadata,
            expectations=expectations,
        )

    @property
    def is_slow(self):
        return SLOW_TAG in self.tags

    def ring(self):
        return PolyRing(self.variables, FieldSpec.from_text(self.field))

    def polynomial(self, ring):
        """Parse f in ring, substituting the instantiated parameters."""
        missing = [name for name in self.parameters if name not in self.constants]
        if missing:
            raise UsageError(f"parameters {missing} of {self.name!r} have no value")
        return parse_polynomial(self.f, ring, constants=self.constants)

    def instantiate(self, point):
        """
        Family member at a parameter point.

        Args:
            point (dict): Parameter name to value text; keys "meta.<key>"
                add per-point metadata.

        Raises:
            UsageError: If the point misses a parameter or names an unknown one.
        """
        values = {k: v for k, v in point.items() if not k.startswith("meta.")}
        metadata = dict(self.metadata)
        metadata.update({k[len("meta."):]: v for k, v in point.items() if k.startswith("meta.")})
        missing = set(self.parameters) - set(values)
        unknown = set(values) - set(self.parameters)
        if missing or unknown:
            raise UsageError(
                f"point {values} must assign exactly {list(self.parameters)}"
                f" (missing {sorted(missing)}, unknown {sorted(unknown)})"
            )
        return replace(
            self,
            name=f"{self.name}[{string_utils.format_point(values)}]",
            constants=values,
            metadata=metadata,
        )

    def echo(self):
        document = {
            "name": self.name,
            "vars": list(self.variables),
            "field": self.field,
            "f": self.f,
            "dmax": self.dmax,
            "max_r": self.max_r,
            "checks": list(self.checks),
            "tags": list(self.tags),
        }
        if self.parameters:
            document["parameters"] = {name: self.constants.get(name) for name in self.parameters}
        return document


def _read_sections(text, source):
    parser = configparser.ConfigParser(interpolation=None, delimiters=("=",))
    parser.optionxform = str
    try:
        parser.read_string(text, source=source)
    except configparser.MissingSectionHeaderError:
        parser = configparser.ConfigParser(interpolation=None, delimiters=("=",))
        parser.optionxform = str
        parser.read_string(f"[{DEFAULT_SECTION}]\n{text}", source=source)
    except configparser.Error as e:
        raise UsageError(f"cannot read {source}: {e}")
    return parser


def load_problem(path):
    """Read a single-problem file (the first section, or a headerless file)."""
    with open(path, encoding="utf-8") as file:
        parser = _read_sections(file.read(), path)
    sections = parser.sections()
    if not sections:
        raise UsageError(f"{path} holds no problem")
    return ProblemSpec.from_mapping(dict(parser[sections[0]]), name=sections[0])


def load_corpus(path=CORPUS_PATH):
    """Read every [entry] section of a corpus file, in file order."""
    with open(path, encoding="utf-8") as file:
        parser = _read_sections(file.read(), path)
    specs = [ProblemSpec.from_mapping(dict(parser[name]), name=name) for name in parser.sections()]
    logger.info(f"Loaded {len(specs)} corpus entries from {path}")
    return specs


class StageError(Exception):
    """A pipeline failure, tagged with one of STAGES."""

    def __init__(self, stage, error):
        if stage not in STAGES:
            raise ValueError(f"unknown stage {stage!r}")
        self.stage = stage
        self.error = error
        super().__init__(f"stage {stage}: {error}")


def exit_code_for(error):
    if isinstance(error, (AssertionError, IdentityCheckError)):
        return EXIT_CODES["THEOREM"]
    return EXIT_CODES["USAGE"]


@dataclass(frozen=True)
class Mismatch:
    entry: str
    field: str
    expected: str
    got: str


@dataclass
class ProblemRun:
    """Everything one pipeline run produced."""

    spec: ProblemSpec
    data: object
    report: object
    checks: list
    document: dict

    @property
    def exit_code(self):
        failed = any(check.status == "fail" for check in self.checks)
        return EXIT_CODES["THEOREM"] if failed else EXIT_CODES["OK"]


def _witness_dict(witness):
    return {"unit": render_polynomial(witness.unit), "global": witness.is_global}


def _analysis_dict(report):
    table = report.t_table
    return {
        "smooth": report.smooth,
        "r_of_f": report.r_of_f,
        "id_of_f": report.id_of_f,
        "rn": report.rn,
        "rt": report.rt,
        "rt_gradient": report.rt_gradient,
        "verdict": report.verdict,
        "linear_jacobian_type": report.linear_jacobian_type,
        "expected_jacobian_type": report.expected_jacobian_type,
        "euler_homogeneous": report.euler_homogeneous,
        "regular_sequence": report.regular_sequence,
        "dmax": report.dmax,
        "t_table": table.as_dict() if table else {},
        "t_nonzero": [f"{i}:{d}" for i, d in table.nonzero_entries()] if table else [],
        "effective_quotients": {
            str(d): "zero" if vanishes else "nonzero"
            for d, vanishes in report.effective_quotients.items()
        },
        "left_terms": {
            str(d): "zero" if vanishes else "nonzero" for d, vanishes in report.left_terms.items()
        },
        "colon_j_f": string_utils.render_generators(report.colon_j_f),
        "witnesses": {name: _witness_dict(w) for name, w in sorted(report.witnesses.items())},
        "diagnostics": list(report.diagnostics),
    }


def _evidence_dict(evidence):
    return {
        "relation_type": evidence.relation_type,
        "degree_histogram": {str(d): count for d, count in evidence.histogram.items()},
        "survivors": {
            str(d): string_utils.render_generators(polys)
            for d, polys in sorted(evidence.survivors.items())
        },
    }


def _rees_dict(report):
    if report.smooth:
        return {"note": "smooth germ: I is the unit ideal locally, Q is linear"}
    if report.presentation is None:
        return {"note": "Rees presentation not requested (check rt)"}
    document = {
        "variables": list(report.presentation.names),
        "jacobian": _evidence_dict(report.rees_evidence),
        "gradient": _evidence_dict(report.gradient_evidence),
    }
    top = report.top_equation
    if top is not None:
        document["top_equation"] = {
            "equation": render_polynomial(top.equation),
            "unit": render_polynomial(top.unit),
            "degree": top.degree,
            "monic": top.monic,
            "homogeneous": top.homogeneous,
            "substitution_vanishes": top.substitution_vanishes,
            "in_defining_ideal": top.in_defining_ideal,
        }
    return document


def _disclaimers(report):
    disclaimers = []
    if not report.smooth and report.t_table is not None:
        disclaimers.append(f"T-table and effective quotients {report.verified_range()}")
    if report.field.is_prime_field:
        disclaimers.append(
            f"computed over {report.field.text}: characteristic-p evidence for the rational case"
        )
    if not report.local:
        disclaimers.append("global ideals of the polynomial ring, not germs at the origin")
    disclaimers.extend(report.diagnostics)
    return disclaimers


def build_document(spec, report, checks, timings=None):
    """Assemble the JSON report document."""
    document = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": TOOL_VERSION,
        "problem": spec.echo(),
        "field": report.field.text,
        "evidence_label": report.field.label,
        "semantics": LOCAL_SEMANTICS_LABEL if report.local else GLOBAL_SEMANTICS_LABEL,
        "analysis": _analysis_dict(report),
        "rees": _rees_dict(report),
        "checks": [
            {
                "name": check.name,
                "status": check.status,
                "statement": CROSS_VALIDATION_CHECKS[check.name],
                "detail": check.detail,
            }
            for check in checks
        ],
        "disclaimers": _disclaimers(report),
        "metadata": dict(spec.metadata),
    }
    if timings is not None:
        document["timings"] = timings
    return document


def run_problem(spec, include_timings=False, workers=DEFAULT_WORKERS):
    """
    Run ingest, build_divisor, classify and cross_validate on one spec.

    Returns:
        ProblemRun: With the report document.

    Raises:
        StageError: Wrapping the first error, tagged with its stage. Failures
            inside classify are tagged "rees" or "top_equation" when they
            happen there.
    """
    timer = StageTimer()
    analysis_timer = StageTimer()
    stage = "ingest"
    try:
        with timer.stage(stage):
            ring = spec.ring()
            f = spec.polynomial(ring)
        stage = "build_divisor"
        with timer.stage(stage):
            data = build_divisor(f, ring)
        stage = "classify"
        with timer.stage(stage):
            report = classify(
                data,
                dmax=spec.dmax,
                max_r=spec.max_r,
                local=spec.local,
                workers=workers,
                steps=[name for name in spec.checks if name in ANALYSIS_STEPS],
                timer=analysis_timer,
            )
        checks = []
        if "cross_validate" in spec.checks:
            stage = "cross_validate"
            with timer.stage(stage):
                checks = cross_validate(data, report, strict=False, metadata=spec.metadata)
    except Exception as e:
        if stage == "classify" and analysis_timer.failed in STAGES:
            stage = analysis_timer.failed
        logger.error(f"{spec.name}: {stage} failed: {e}")
        raise StageError(stage, e) from e

    timings = None
    if include_timings:
        timings = timer.as_dict()
        timings.update({f"classify.{name}": s for name, s in report.timings.items()})
    document = build_document(spec, report, checks, timings)
    logger.info(
        f"{string_utils.format_summary(document)} in {format_duration(sum(timer.timings.values()))}"
    )
    return ProblemRun(spec, data, report, checks, document)


def _parse_bool(text):
    lowered = text.strip().lower()
    if lowered not in ("true", "false"):
        raise UsageError(f"expected true or false, got {text!r}")
    return lowered == "true"


def compare_expectations(run):
    """
    Compare a run against the expect.* values of its spec.

    Returns:
        list[Mismatch]: Empty when everything matches.
    """
    spec, report = run.spec, run.report
    analysis = run.document["analysis"]
    mismatches = []

    def compare(name, expected, got):
        if expected != got:
            mismatches.append(Mismatch(spec.name, name, str(expected), str(got)))

    for name, text in spec.expectations.items():
        if name in ("rt", "rn", "rt_gradient"):
            compare(name, int(text), analysis[name])
        elif name == "verdict":
            if text not in VERDICTS:
                raise UsageError(f"unknown verdict {text!r}; choose from {VERDICTS}")
            compare(name, text, analysis["verdict"])
        elif name == "euler":
            compare(name, _parse_bool(text), analysis["euler_homogeneous"])
        elif name == "regular_sequence":
            compare(name, _parse_bool(text), analysis["regular_sequence"])
        elif name in ("t_zero", "t_nonzero"):
            wanted = name == "t_zero"
            for i, d in parse_index_ranges(text):
                key = f"T_{i},{d}"
                if report.t_table is None or not report.t_table.has(i, d):
                    compare(key, "zero" if wanted else "nonzero", "not computed")
                else:
                    got = report.t_table.is_zero(i, d)
                    compare(key, "zero" if wanted else "nonzero", "zero" if got else "nonzero")
        elif name == "colon_j_f":
            ring = run.data.ring
            expected = Ideal(ring, [parse_polynomial(g, ring) for g in split_list(text)])
            equal = same_ideal(expected, run.data.effective_colon(1), local=spec.local)
            compare(name, text, text if equal else ", ".join(analysis["colon_j_f"]))
    return mismatches


@dataclass
class EntryResult:
    """Outcome of one corpus entry or sweep point, safe to send between processes."""

    index: int
    name: str
    document: dict = None
    mismatches: list = dataclasses.field(default_factory=list)
    exit_code: int = EXIT_CODES["OK"]
    error: str = None
    stage: str = None


def run_entry(index, spec, include_timings=False, compare=True):
    """Run one spec in isolation; any error becomes part of the result."""
    try:
        run = run_problem(spec, include_timings=include_timings)
    except StageError as e:
        return EntryResult(
            index, spec.name, exit_code=exit_code_for(e.error), error=str(e.error), stage=e.stage
        )
    try:
        mismatches = compare_expectations(run) if compare else []
    except Exception as e:
        logger.error(f"{spec.name}: compare failed: {e}")
        return EntryResult(
            index,
            spec.name,
            run.document,
            exit_code=exit_code_for(e),
            error=str(e),
            stage="compare",
        )
    return EntryResult(index, spec.name, run.document, mismatches, run.exit_code)


def run_entries(specs, workers=DEFAULT_WORKERS, include_timings=False, compare=True):
    """
    Run specs on a process pool; results come back in input order.

    Each worker process builds its own rings and caches.
    """
    results = [None] * len(specs)
    if workers <= 1:
        for index, spec in enumerate(tqdm(specs, desc="Analyzing")):
            results[index] = run_entry(index, spec, include_timings, compare)
        return results
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [
            executor.submit(run_entry, index, spec, include_timings, compare)
            for index, spec in enumerate(specs)
        ]
        for future in tqdm(
            concurrent.futures.as_completed(futures), total=len(futures), desc="Analyzing"
        ):
            result = future.result()
            results[result.index] = result
    return results


def _result_record(result):
    return {
        "name": result.name,
        "exit_code": result.exit_code,
        "error": result.error,
        "stage": result.stage,
        "mismatches": [dataclasses.asdict(m) for m in result.mismatches],
        "report": result.document,
    }


@contextmanager
def _write_stage():
    try:
        yield
    except OSError as e:
        raise StageError("write", e) from e


def cmd_analyze(args):
    """Analyze one problem and write its report; returns the exit code."""
    if args.spec:
        spec = load_problem(args.spec)
        overrides = {
            "variables": tuple(split_list(args.vars)) if args.vars else None,
            "field": args.field,
            "f": args.f,
            "dmax": args.dmax,
            "max_r": args.max_r,
            "checks": tuple(split_list(args.checks)) if args.checks else None,
        }
        spec = replace(spec, **{k: v for k, v in overrides.items() if v is not None})
    else:
        if not args.vars or not args.f:
            raise UsageError("analyze needs --spec, or both --vars and --f")
        spec = ProblemSpec(
            name=args.name,
            variables=tuple(split_list(args.vars)),
            field=args.field or DEFAULT_FIELD,
            f=args.f,
            dmax=args.dmax,
            max_r=args.max_r or DEFAULT_ANALYSIS_CONFIG["MAX_R"],
            checks=tuple(split_list(args.checks)) if args.checks else CHECK_NAMES,
        )
    spec = replace(spec, local=not args.global_semantics)
    run = run_problem(spec, include_timings=args.timings, workers=args.workers)
    logger.info("T-table:\n" + string_utils.format_t_table(
        run.document["analysis"]["t_table"], run.report.dmax
    ))
    with _write_stage():
        data_utils.write_json(run.document, args.out)
    for check in run.checks:
        if check.status == "fail":
            logger.error(f"Theorem check {check.name} failed: {check.detail}")
    return run.exit_code


def _point_status(result):
    if result.exit_code == EXIT_CODES["OK"]:
        return "ok"
    return f"error: {result.error or 'theorem checks failed'}"


def cmd_sweep(args):
    """
    Analyze a parameterized family at every point of a CSV file.

    Per-point failures are recorded and the sweep continues; the exit code
    is the worst per-point code.
    """
    family = replace(load_problem(args.spec), local=not args.global_semantics)
    if args.field:
        family = replace(family, field=args.field)
    points = data_utils.read_points(args.points)
    specs, rows, failed = [], [], {}
    for index, point in enumerate(points):
        try:
            specs.append((index, family.instantiate(point)))
        except UsageError as e:
            logger.error(f"Point {index} skipped: {e}")
            failed[index] = EntryResult(
                index, str(point), exit_code=EXIT_CODES["USAGE"], error=str(e)
            )
    results = run_entries([spec for _, spec in specs], workers=args.workers, compare=False)
    by_point = dict(failed)
    for (index, _), result in zip(specs, results):
        by_point[index] = replace(result, index=index)

    for index, point in enumerate(points):
        result = by_point[index]
        analysis = result.document["analysis"] if result.document else {}
        rows.append(
            {
                "point": string_utils.format_point(point),
                "rn": analysis.get("rn"),
                "rt": analysis.get("rt"),
                "rt_gradient": analysis.get("rt_gradient"),
                "verdict": analysis.get("verdict"),
                "status": _point_status(result),
            }
        )
    table = data_utils.summary_table(rows)
    print(table.to_string(index=False) if rows else "(no points)")
    with _write_stage():
        if args.out:
            table.to_csv(args.out, index=False)
        if args.jsonl:
            records = [_result_record(by_point[i]) for i in range(len(points))]
            data_utils.write_jsonl(records, args.jsonl)
    return max((result.exit_code for result in by_point.values()), default=EXIT_CODES["OK"])


def cmd_corpus(args):
    """
    Run the corpus and compare against its expectations.

    Returns:
        int: 0 when everything matches, 3 on any mismatch or failed entry,
        2 when only theorem checks failed.
    """
    specs = load_corpus(args.file)
    selected = [
        spec
        for spec in specs
        if (args.include_slow or not spec.is_slow) and (not args.field or spec.field == args.field)
    ]
    logger.info(f"Running {len(selected)} of {len(specs)} corpus entries")
    results = run_entries(selected, workers=args.workers, include_timings=args.timings)

    mismatches, theorem_failures = [], []
    for result in results:
        if result.error:
            stage = result.stage or "error"
            mismatches.append(Mismatch(result.name, stage, "success", result.error))
        mismatches.extend(result.mismatches)
        if result.exit_code == EXIT_CODES["THEOREM"]:
            theorem_failures.append(result.name)
        status = "pass" if not result.error and not result.mismatches else "FAIL"
        logger.info(f"{status} {result.name}")
    if args.out:
        with _write_stage():
            data_utils.write_jsonl([_result_record(r) for r in results], args.out)

    for mismatch in mismatches:
        print(string_utils.format_mismatch(mismatch))
    print(f"{len(results) - len({m.entry for m in mismatches})}/{len(results)} entries passed")
    if mismatches:
        return EXIT_CODES["MISMATCH"]
    if theorem_failures:
        logger.error(f"Theorem checks failed for {theorem_failures}")
        return EXIT_CODES["THEOREM"]
    return EXIT_CODES["OK"]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jacobian-type",
        description="Relation type of Jacobian ideals of hypersurface germs.",
    )
    parser.add_argument("--log-file", help="Also write log lines to this file.")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def common(sub):
        sub.add_argument("--global", dest="global_semantics", action="store_true",
                         help="Use global ideals instead of germs at the origin.")
        sub.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
        sub.add_argument("--timings", action="store_true", help="Report per-stage seconds.")

    analyze = subparsers.add_parser("analyze", help="Analyze one germ.")
    analyze.add_argument("--spec", help="Problem file (key = value).")
    analyze.add_argument("--name", default="cli")
    analyze.add_argument("--vars", help="Comma separated variables, e.g. x,y.")
    analyze.add_argument("--field", help='"q" or "gf:p".')
    analyze.add_argument("--f", help="The germ as an expression.")
    analyze.add_argument("--dmax", type=int)
    analyze.add_argument("--max-r", dest="max_r", type=int)
    analyze.add_argument("--checks", help=f"Comma separated subset of {','.join(CHECK_NAMES)}.")
    analyze.add_argument("--out", help="Report file; stdout when omitted.")
    common(analyze)
    analyze.set_defaults(handler=cmd_analyze)

    sweep = subparsers.add_parser("sweep", help="Analyze a family at parameter points.")
    sweep.add_argument("--spec", required=True, help="Family problem file with parameters.")
    sweep.add_argument("--points", required=True, help="CSV of parameter points.")
    sweep.add_argument("--field", help="Override the family field.")
    sweep.add_argument("--out", help="Write the summary table as CSV.")
    sweep.add_argument("--jsonl", help="Write one report per point as JSON lines.")
    common(sweep)
    sweep.set_defaults(handler=cmd_sweep)

    corpus = subparsers.add_parser("corpus", help="Run the corpus against its expectations.")
    corpus.add_argument("--file", default=CORPUS_PATH)
    corpus.add_argument("--include-slow", action="store_true")
    corpus.add_argument("--field", help="Only run entries over this field.")
    corpus.add_argument("--out", help="Write per-entry results as JSON lines.")
    common(corpus)
    corpus.set_defaults(handler=cmd_corpus)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    set_verbosity(args.verbose)
    if args.log_file:
        setup_file_logger(logging.getLogger(), args.log_file)
    try:
        return args.handler(args)
    except StageError as e:
        logger.error(f"Failed in stage {e.stage}: {e.error}")
        if hasattr(e.error, "caret_line"):
            print(e.error.caret_line(), file=sys.stderr)
        return exit_code_for(e.error)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_CODES["USAGE"]
    except OSError as e:
        logger.error(f"Cannot read input: {e}")
        return EXIT_CODES["USAGE"]


if __name__ == "__main__":
    sys.exit(main())
