"""
Text and JSON rendering of reports.

JSON documents are ``{"schema_version", "command", "result"}`` with the
pydantic dump as result. Text tables go through pandas.
"""

import json
from typing import Any, Dict, Iterable, List, Sequence

import pandas as pd
from pydantic import BaseModel

from ..config.settings import SETTINGS
from .models import (
    BasisReport,
    BilleyReport,
    ContinuedFractionReport,
    Counterexample,
    FijReport,
    FixedPointsReport,
    GeneralPetersonReport,
    GiambelliReport,
    HessenbergCertificate,
    HilbertReport,
    IdealReport,
    MonkReport,
    PetersonClassReport,
    PetersonPresentationReport,
    PointValue,
    RegularityReport,
    VerifyAllBudget,
    VerifyAllReport,
)


def to_json_document(command: str, result: BaseModel) -> str:
    document: Dict[str, Any] = {
        "schema_version": SETTINGS.schema_version,
        "command": command,
        "result": result.model_dump(mode="json"),
    }
    return json.dumps(document, indent=2, sort_keys=False)


def table(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    if not rows:
        return "(empty)"
    return pd.DataFrame(list(rows), columns=list(columns)).to_string(index=False)


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _failures(failures: Iterable[Counterexample]) -> List[str]:
    return [f"  counterexample: {f.label} at {f.point}: {f.value}" for f in failures]


def _point_values(values: Sequence[PointValue]) -> str:
    return table([{"point": v.point, "value": v.value} for v in values], ["point", "value"])


def _set(items: Sequence[int]) -> str:
    return "{" + ",".join(str(x) for x in items) + "}"


def render_fixed_points(report: FixedPointsReport) -> str:
    lines = [f"h = ({','.join(map(str, report.h))}), indecomposable: {report.indecomposable}"]
    separator = "" if len(report.h) < 10 else ","
    lines += [separator.join(str(x) for x in w) for w in report.fixed_points]
    lines.append(f"{report.count} fixed points")
    return "\n".join(lines)


def render_billey(report: BilleyReport) -> str:
    return "\n".join(
        [
            f"{report.cartan}: sigma_v(w), v = {'.'.join(map(str, report.v_word)) or 'e'}, w = {report.w}",
            f"reduced word of w: {'.'.join(map(str, report.word_used)) or 'e'}",
            f"reduced subwords: {len(report.occurrences)}",
            report.value_text,
        ]
    )


def render_peterson_class(report: PetersonClassReport) -> str:
    return "\n".join([f"p_v{_set(report.subset)} in {report.label}", _point_values(report.values)])


def render_monk(report: MonkReport) -> str:
    rows = [{"B": _set(report.subset), "closed": report.diagonal_closed, "oracle": report.diagonal_oracle}]
    rows += [{"B": _set(term.subset), "closed": term.closed, "oracle": term.oracle} for term in report.terms]
    return "\n".join(
        [
            f"p_s{report.i} * p_v{_set(report.subset)} in {report.label}",
            table(rows, ["B", "closed", "oracle"]),
            f"nonnegative integers: {report.nonnegative_integers}",
            _status(report.passed),
        ]
    )


def render_giambelli(report: GiambelliReport) -> str:
    lines = [f"p_v{_set(report.subset)} = {report.factor} * prod p_s_i in {report.label}", _status(report.passed)]
    return "\n".join(lines + _failures(report.failures))


def render_general(report: GeneralPetersonReport) -> str:
    lines = [
        f"p_v{_set(report.subset)} in {report.cartan}, v = {'.'.join(map(str, report.v_word)) or 'e'}",
        _point_values(report.values),
        f"|Red(v)| = {report.reduced_word_count}, ordering independent: {report.ordering_independent}",
    ]
    if report.giambelli is not None:
        lines.append(f"Giambelli factor {report.giambelli.factor}: {_status(report.giambelli.passed)}")
    lines.append(
        table(
            [
                {"i": m.i, "diagonal": m.diagonal_closed, "terms": len(m.terms), "status": _status(m.passed)}
                for m in report.monk
            ],
            ["i", "diagonal", "terms", "status"],
        )
    )
    lines.append(
        table(
            [
                {"i": p.i, "j": p.j, "a_ij": p.cartan_integer, "c_i^j": p.coefficient, "status": _status(p.passed)}
                for p in report.cartan_pairs
            ],
            ["i", "j", "a_ij", "c_i^j", "status"],
        )
    )
    lines.append(_status(report.passed))
    return "\n".join(lines)


def render_basis(report: BasisReport) -> str:
    lines = [
        f"basis {report.label}: size {report.size}, rank {report.rank}",
        f"triangular: {report.triangular}, diagonal nonzero: {report.diagonal_nonzero}",
        _status(report.passed),
    ]
    return "\n".join(lines + _failures(report.failures))


def render_fij(report: FijReport) -> str:
    return table(
        [{"i": e.i, "j": e.j, "deg": e.degree, "f_ij": e.polynomial} for e in report.entries],
        ["i", "j", "deg", "f_ij"],
    )


def render_ideal(report: IdealReport) -> str:
    header = f"{report.label} ({report.provenance}, {'equivariant' if report.equivariant else 't = 0'})"
    return "\n".join([header] + [f"  {g}" for g in report.generators])


def _hilbert_rows(report: HilbertReport) -> str:
    rows = [
        {"degree": d, "dimension": report.dimensions.get(d), "expected": report.expected.get(d)}
        for d in sorted(set(report.dimensions) | set(report.expected))
    ]
    return table(rows, ["degree", "dimension", "expected"])


def render_hilbert(report: HilbertReport) -> str:
    return "\n".join(
        [
            f"Hilbert function of {report.label} up to degree {report.up_to}",
            f"expected: {report.expected_series}",
            _hilbert_rows(report),
            _status(report.passed),
        ]
    )


def render_regularity(report: RegularityReport) -> str:
    return (
        f"regular sequence (degrees {report.generator_degrees}, {report.variable_count} variables, "
        f"checked to degree {report.up_to}): {_status(report.regular)}"
    )


def render_certificate(certificate: HessenbergCertificate) -> str:
    lines = [
        f"h = ({','.join(map(str, certificate.h))}), {certificate.fixed_point_count} fixed points",
        f"vanishing: {certificate.vanishing.checks} checks, {_status(certificate.vanishing.passed)}",
        render_hilbert(certificate.hilbert),
        render_regularity(certificate.regularity),
        f"monomial basis: {certificate.monomial_basis.size} monomials, "
        f"quotient dimension {certificate.monomial_basis.total_dimension}, "
        f"{_status(certificate.monomial_basis.passed)}",
        f"certificate: {_status(certificate.passed)}",
    ]
    lines += _failures(certificate.vanishing.failures)
    lines += _failures(certificate.regularity.failures)
    lines += _failures(certificate.monomial_basis.failures)
    return "\n".join(lines)


def render_budget(budget: VerifyAllBudget) -> str:
    return (
        f"budget: n={budget.n}, {budget.hessenberg_functions} Hessenberg functions, "
        f"{budget.fixed_points} fixed points, {budget.vanishing_checks} vanishing checks, "
        f"graded checks to degree {budget.top_degree} (verify_all_max_n={budget.max_n})"
    )


def render_verify_all(report: VerifyAllReport) -> str:
    rows = [
        {
            "h": ",".join(map(str, c.h)),
            "fixed points": c.fixed_point_count,
            "series": c.hilbert.expected_series,
            "vanishing": _status(c.vanishing.passed),
            "hilbert": _status(c.hilbert.passed),
            "regular": _status(c.regularity.regular),
            "basis": _status(c.monomial_basis.passed),
        }
        for c in report.certificates
    ]
    columns = ["h", "fixed points", "series", "vanishing", "hilbert", "regular", "basis"]
    footer = f"{sum(c.passed for c in report.certificates)} of {report.count} Hessenberg functions certified"
    return "\n".join([table(rows, columns), footer])


def render_peterson_presentation(report: PetersonPresentationReport) -> str:
    lines = [f"Peterson presentation {report.label}"] + [f"  {r}" for r in report.relations]
    if report.ideal_equality is not None:
        eq = report.ideal_equality
        lines.append(f"ideal equality {eq.left} = {eq.right} (to degree {eq.up_to}): {_status(eq.equal)}")
    if report.vanishing is not None:
        lines.append(f"vanishing: {report.vanishing.checks} checks, {_status(report.vanishing.passed)}")
        lines += _failures(report.vanishing.failures)
    if report.hilbert_ordinary is not None:
        lines.append(render_hilbert(report.hilbert_ordinary))
    if report.hilbert_equivariant is not None:
        lines.append(render_hilbert(report.hilbert_equivariant))
    lines.append(_status(report.passed))
    return "\n".join(lines)


def render_continued_fraction(report: ContinuedFractionReport) -> str:
    if not report.defined:
        return f"x_{report.failed_at} undefined (division by zero)\n{_status(False)}"
    rows = [{"m": m, "x_m": value} for m, value in enumerate(report.values)]
    return "\n".join([table(rows, ["m", "x_m"]), _status(report.passed)])
