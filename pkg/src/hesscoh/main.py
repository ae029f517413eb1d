"""
Main entry point for hesscoh - parse a request, run it, print the result.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from dotenv import load_dotenv
from pydantic import BaseModel

from hesscoh.algebra.permgroup import Permutation, from_word, is_reduced, reduced_subword_occurrences, reduced_word
from hesscoh.algebra.polyring import HilbertSeriesPoly, parse_rational
from hesscoh.algebra.rootsys import CartanDatum, weyl_group
from hesscoh.config.settings import SETTINGS
from hesscoh.core import render
from hesscoh.core.models import (
    BilleyReport,
    CommandRequest,
    FijEntry,
    FijReport,
    FixedPointsReport,
    IdealReport,
    PetersonClassReport,
    PolynomialPayload,
)
from hesscoh.core.pipeline import VerificationPipeline, estimate_budget, guard_large_run
from hesscoh.localization.billey import billey_restrict, billey_restrict_roots
from hesscoh.localization.hessenberg import HessenbergFunction, SubsetA, fixed_points, parse_int_list
from hesscoh.localization.peterson import (
    basis_report,
    cartan_calculus,
    general_report,
    giambelli_check,
    monk_report,
    type_a_calculus,
    vk_element,
)
from hesscoh.presentation.certificates import (
    continued_fraction_check,
    continued_fraction_condition,
    expected_poincare,
    hilbert_report,
    peterson_presentation_check,
    peterson_presentation_general,
)
from hesscoh.presentation.graded import GradedQuotient
from hesscoh.presentation.relations import fij_table, ideal_for

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


@dataclass
class Outcome:
    report: BaseModel
    text: str
    passed: bool = True


# -- request construction ---------------------------------------------------


def _ints(text: Optional[str]) -> Optional[List[int]]:
    return None if text is None else parse_int_list(text)


def build_request(args: argparse.Namespace) -> CommandRequest:
    """Validate every flag before anything is computed."""
    h = _ints(getattr(args, "h", None))
    n = getattr(args, "n", None)
    if h is not None and n is None:
        n = len(h)
    subset = getattr(args, "subset", None)
    request = CommandRequest(
        command=args.command,
        action=getattr(args, "action", None),
        n=n,
        h=h,
        subset=_ints(subset) if subset is not None else None,
        i=getattr(args, "i", None),
        v=getattr(args, "v", None),
        w=getattr(args, "w", None),
        word=_ints(getattr(args, "word", None)),
        cartan=getattr(args, "cartan", None),
        c=getattr(args, "c", None),
        m=getattr(args, "m", None),
        up_to=getattr(args, "up_to", None),
        t0=getattr(args, "t0", False),
        json_output=args.json,
        allow_large=getattr(args, "allow_large", False),
    )
    if request.h is not None:
        HessenbergFunction(tuple(request.h))
    if request.cartan is not None:
        CartanDatum.parse(request.cartan)
    return request


def _require(value, flag: str):
    if value is None:
        raise ValueError(f"{flag} is required for this command")
    return value


def _hessenberg(request: CommandRequest) -> HessenbergFunction:
    return HessenbergFunction(tuple(_require(request.h, "--h")))


def _subset_a(request: CommandRequest) -> SubsetA:
    n = _require(request.n, "--n")
    return SubsetA(frozenset(request.subset or ()), n)


# -- handlers ---------------------------------------------------------------


def run_fixed_points(request: CommandRequest) -> Outcome:
    h = _hessenberg(request)
    points = fixed_points(h)
    report = FixedPointsReport(
        h=list(h.values),
        fixed_points=[list(w.word) for w in points],
        count=len(points),
        indecomposable=h.is_indecomposable(),
    )
    return Outcome(report, render.render_fixed_points(report))


def run_billey(request: CommandRequest) -> Outcome:
    datum = CartanDatum.parse(_require(request.cartan, "--cartan"))
    v_word = parse_int_list(_require(request.v, "--v"))
    w_text = _require(request.w, "--w")
    if datum.letter == "A":
        n = datum.rank + 1
        if not is_reduced(v_word, n):
            raise ValueError(f"--v {v_word} is not a reduced word in S_{n}")
        v = from_word(v_word, n)
        w = Permutation.parse(w_text)
        if w.n != n:
            raise ValueError(f"--w {w_text} is not in S_{n}")
        word = tuple(request.word) if request.word is not None else reduced_word(w)
        value = billey_restrict(v, w, word=word)
        occurrences = reduced_subword_occurrences(v, word)
        w_label = w.format()
    else:
        group = weyl_group(datum)
        if not group.is_reduced(v_word):
            raise ValueError(f"--v {v_word} is not a reduced word in W({datum.label})")
        w_word = parse_int_list(w_text)
        if not group.is_reduced(w_word):
            raise ValueError(f"--w {w_word} is not a reduced word in W({datum.label})")
        v = group.from_word(v_word)
        w = group.from_word(w_word)
        word = tuple(request.word) if request.word is not None else tuple(w_word)
        value = billey_restrict_roots(v, w, datum, word)
        occurrences = group.subword_occurrences(v, word)
        w_label = w.format()
    report = BilleyReport(
        cartan=datum.label,
        v_word=list(v_word),
        w=w_label,
        word_used=list(word),
        occurrences=[list(o) for o in occurrences],
        value=PolynomialPayload.from_polynomial(value),
        value_text=value.format(),
    )
    return Outcome(report, render.render_billey(report))


def run_peterson(request: CommandRequest) -> Outcome:
    action = request.action
    if action == "class":
        if request.cartan is not None:
            datum = CartanDatum.parse(request.cartan)
            subset = frozenset(request.subset or ())
            calculus = cartan_calculus(datum)
            element = calculus.class_of(subset)
            report = PetersonClassReport(
                label=datum.label,
                subset=sorted(subset),
                v_word=list(vk_element(subset, datum).word),
                values=calculus.value_table(element),
            )
        else:
            subset_a = _subset_a(request)
            calculus = type_a_calculus(subset_a.n)
            report = PetersonClassReport(
                label=calculus.label,
                subset=list(subset_a.sorted()),
                v_word=list(subset_a.sorted()),
                values=calculus.value_table(calculus.class_of(subset_a.elements)),
            )
        return Outcome(report, render.render_peterson_class(report))
    if action == "monk":
        i = _require(request.i, "--i")
        report = monk_report(i, _subset_a(request))
        return Outcome(report, render.render_monk(report), report.passed and report.nonnegative_integers)
    if action == "giambelli":
        report = giambelli_check(_subset_a(request))
        return Outcome(report, render.render_giambelli(report), report.passed)
    if action == "general":
        datum = CartanDatum.parse(_require(request.cartan, "--cartan"))
        report = general_report(frozenset(request.subset or ()), datum)
        return Outcome(report, render.render_general(report), report.passed)
    if action == "basis":
        report = basis_report(_require(request.n, "--n"))
        return Outcome(report, render.render_basis(report), report.passed)
    raise ValueError(f"unknown peterson action {action!r}")


def run_fij(request: CommandRequest) -> Outcome:
    n = _require(request.n, "--n")
    entries = [
        FijEntry(i=i, j=j, degree=poly.cohomological_degree(), polynomial=poly.format())
        for i, j, poly in fij_table(n, with_t=not request.t0)
    ]
    report = FijReport(n=n, t0=request.t0, entries=entries)
    return Outcome(report, render.render_fij(report))


def run_ideal(request: CommandRequest) -> Outcome:
    ideal = ideal_for(_hessenberg(request), with_t=not request.t0)
    report = IdealReport(
        label=ideal.label,
        provenance=ideal.provenance.value,
        equivariant=ideal.equivariant,
        generators=ideal.formatted(),
        generators_json=[PolynomialPayload.from_polynomial(g) for g in ideal.generators],
    )
    return Outcome(report, render.render_ideal(report))


def run_hilbert(request: CommandRequest) -> Outcome:
    h = _hessenberg(request)
    expected = expected_poincare(h)
    if not request.t0:
        # one extra variable t against n generators
        expected = HilbertSeriesPoly(expected.coefficients, 1)
    quotient = GradedQuotient(ideal_for(h, with_t=not request.t0))
    report = hilbert_report(quotient, expected, request.up_to)
    return Outcome(report, render.render_hilbert(report), report.passed)


def run_verify(request: CommandRequest) -> Outcome:
    certificate = VerificationPipeline().certify(_hessenberg(request))
    return Outcome(certificate, render.render_certificate(certificate), certificate.passed)


def run_verify_all(request: CommandRequest) -> Outcome:
    n = _require(request.n, "--n")
    guard_large_run(n, request.allow_large)
    budget = estimate_budget(n)
    if not request.json_output:
        # shown before the fan-out starts
        print(render.render_budget(budget), flush=True)
    report = VerificationPipeline().verify_all(n, allow_large=request.allow_large, budget=budget)
    return Outcome(report, render.render_verify_all(report), report.passed)


def run_peterson_presentation(request: CommandRequest) -> Outcome:
    if request.cartan is not None:
        report = peterson_presentation_general(CartanDatum.parse(request.cartan))
    else:
        n = _require(request.n, "--n or --cartan")
        report = peterson_presentation_check(n)
    return Outcome(report, render.render_peterson_presentation(report), report.passed)


def run_cfrac(request: CommandRequest) -> Outcome:
    text = _require(request.c, "--c")
    if "," in text:
        report = continued_fraction_condition([parse_rational(part) for part in text.split(",")])
    else:
        report = continued_fraction_check(parse_rational(text), _require(request.m, "--m"))
    return Outcome(report, render.render_continued_fraction(report), report.passed)


HANDLERS: Dict[str, Callable[[CommandRequest], Outcome]] = {
    "fixed-points": run_fixed_points,
    "billey": run_billey,
    "peterson": run_peterson,
    "fij": run_fij,
    "ideal": run_ideal,
    "hilbert": run_hilbert,
    "verify": run_verify,
    "verify-all": run_verify_all,
    "peterson-presentation": run_peterson_presentation,
    "cfrac": run_cfrac,
}


def execute(request: CommandRequest) -> Outcome:
    return HANDLERS[request.command](request)


def run(request: CommandRequest) -> int:
    """Execute and print; returns the exit code."""
    outcome = execute(request)
    if request.json_output:
        print(render.to_json_document(request.command, outcome.report))
    else:
        print(outcome.text)
    return EXIT_OK if outcome.passed else EXIT_FAILED


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit a single JSON document")
    common.add_argument("--verbose", action="store_true", help="Log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="hesscoh",
        description="hesscoh - exact cohomology of flag, Peterson and regular nilpotent Hessenberg varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fixed-points", parents=[common], help="S-fixed points of Hess(N,h)")
    p.add_argument("--h", required=True, help="Hessenberg function, e.g. 3,3,4,4")

    p = sub.add_parser("billey", parents=[common], help="Restriction of sigma_v at w")
    p.add_argument("--cartan", required=True, help="Cartan type, e.g. A3 or B2")
    p.add_argument("--v", required=True, help="Reduced word of v, e.g. 1,2")
    p.add_argument("--w", required=True, help="One-line notation (type A) or reduced word of w")
    p.add_argument("--word", help="Reduced word of w to sum over")

    p = sub.add_parser("peterson", parents=[common], help="Peterson Schubert calculus")
    p.add_argument("action", choices=["class", "monk", "giambelli", "general", "basis"])
    p.add_argument("--n", type=int)
    p.add_argument("--A", "--K", dest="subset", default="", help="Subset of simple roots, e.g. 1,3")
    p.add_argument("--i", type=int)
    p.add_argument("--cartan")

    p = sub.add_parser("fij", parents=[common], help="Table of f_{i,j}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t0", action="store_true", help="Set t = 0")

    p = sub.add_parser("ideal", parents=[common], help="Generators f_{h(j),j} of I_h")
    p.add_argument("--h", required=True)
    p.add_argument("--t0", action="store_true")

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert function of Q[x(,t)]/I_h")
    p.add_argument("--h", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--t0", action="store_true", default=True)
    mode.add_argument("--equivariant", dest="t0", action="store_false")
    p.add_argument("--up-to", dest="up_to", type=int, help="Cohomological degree bound")

    p = sub.add_parser("verify", parents=[common], help="Full certificate for one h")
    p.add_argument("--h", required=True)

    p = sub.add_parser("verify-all", parents=[common], help="Certificates for every h on [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--allow-large", dest="allow_large", action="store_true")

    p = sub.add_parser("peterson-presentation", parents=[common], help="Quadratic Peterson presentation")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--n", type=int)
    target.add_argument("--cartan")

    p = sub.add_parser("cfrac", parents=[common], help="Continued-fraction positivity")
    p.add_argument("--c", required=True, help="Constant c, or c_1,...,c_k")
    p.add_argument("--m", type=int, help="Number of steps for constant c")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv(Path(__file__).parent.parent.parent / "config" / ".env")

    parser = build_parser()
    args = parser.parse_args(argv)

    level_name = "INFO" if args.verbose else SETTINGS.logging_level
    level = getattr(logging, level_name.upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    try:
        request = build_request(args)
        logger.info("Running %s", request.command)
        return run(request)
    except ValueError as exc:
        logger.debug("Invalid request", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
