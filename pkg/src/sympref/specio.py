"""JSON interchange: group specifications and analysis reports.

A group specification is a JSON object

    {
      "name": "...",
      "dimension": 4,
      "conductor": 12,
      "symplectic_form": "standard" | [[...]] | null,
      "generators": [ [[...]], ... ]
    }

where matrix entries are exact scalars: an integer, a rational string
"p/q", or a cyclotomic object {"conductor": m, "coeffs": [...]} whose
conductor divides the document conductor (defaulting to it).  Floats
are rejected; this file format carries exact data only.

Reports are emitted with a fixed key order so that equal analyses are
byte-identical.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, NotASubfield, euler_phi
from .groups import (
    DEFAULT_MAX_ORDER,
    FiniteMatrixGroup,
    conjugacy_classes,
)
from .linalg import BadForm, ExactMatrix, check_form, standard_symplectic_form
from .reflections import (
    census,
    reflection_subgroup,
    verdict,
    z_locus_min_codim,
)
from .stratification import build_lattice


class ParseError(ValueError):
    """The document is not JSON."""


class ValidationError(ValueError):
    """The document is JSON but not a valid group specification."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


@dataclass(frozen=True)
class GroupSpecDocument:
    name: str
    dimension: int
    conductor: int
    symplectic_form: object  # "standard", an ExactMatrix, or None
    generators: tuple[ExactMatrix, ...]

    def omega(self) -> ExactMatrix | None:
        if self.symplectic_form == "standard":
            return standard_symplectic_form(self.dimension, self.conductor)
        return self.symplectic_form


def _fail(path, message):
    raise ValidationError("%s: %s" % (path, message))


def _parse_rational(value, path) -> Fraction:
    if isinstance(value, bool):
        _fail(path, "booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        _fail(path, "floats are not exact; use a rational string")
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            _fail(path, "malformed rational %r" % value)
        return Fraction(value)
    _fail(path, "expected a rational, got %s" % type(value).__name__)


def _parse_scalar(value, conductor, path) -> CyclotomicNumber:
    if isinstance(value, dict):
        extra = set(value) - {"conductor", "coeffs"}
        if extra:
            _fail(path, "unknown keys %s" % sorted(extra))
        sub = value.get("conductor", conductor)
        if not isinstance(sub, int) or isinstance(sub, bool) or sub < 1:
            _fail(path + ".conductor", "must be a positive integer")
        if conductor % sub != 0:
            _fail(
                path + ".conductor",
                "%d does not divide the document conductor %d"
                % (sub, conductor),
            )
        coeffs = value.get("coeffs")
        if not isinstance(coeffs, list):
            _fail(path + ".coeffs", "must be a list")
        if len(coeffs) != euler_phi(sub):
            _fail(
                path + ".coeffs",
                "conductor %d needs %d coefficients, got %d"
                % (sub, euler_phi(sub), len(coeffs)),
            )
        parsed = [
            _parse_rational(c, "%s.coeffs[%d]" % (path, i))
            for i, c in enumerate(coeffs)
        ]
        return CyclotomicNumber(sub, parsed).promote(conductor)
    return CyclotomicNumber.rational(
        _parse_rational(value, path), conductor
    )


def _parse_matrix(value, dimension, conductor, path) -> ExactMatrix:
    if not isinstance(value, list) or len(value) != dimension:
        _fail(path, "expected a list of %d rows" % dimension)
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != dimension:
            _fail("%s[%d]" % (path, i), "expected %d entries" % dimension)
        rows.append(
            [
                _parse_scalar(cell, conductor, "%s[%d][%d]" % (path, i, j))
                for j, cell in enumerate(row)
            ]
        )
    return ExactMatrix.from_rows(rows, conductor)


def parse_group_spec(document) -> GroupSpecDocument:
    """Parse and validate a group specification document."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON: %s" % exc) from None
    if not isinstance(document, dict):
        raise ValidationError("top level must be a JSON object")
    extra = set(document) - {
        "name", "dimension", "conductor", "symplectic_form", "generators",
    }
    if extra:
        raise ValidationError("unknown keys %s" % sorted(extra))

    name = document.get("name")
    if not isinstance(name, str):
        _fail("name", "required and must be a string")
    dimension = document.get("dimension")
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 1:
        _fail("dimension", "required and must be a positive integer")
    conductor = document.get("conductor", 1)
    if not isinstance(conductor, int) or isinstance(conductor, bool) or conductor < 1:
        _fail("conductor", "must be a positive integer")

    form = document.get("symplectic_form")
    if form is not None and form != "standard":
        form = _parse_matrix(form, dimension, conductor, "symplectic_form")
        try:
            check_form(form)
        except BadForm as exc:
            _fail("symplectic_form", str(exc))
    elif form == "standard" and dimension % 2:
        _fail("symplectic_form", "standard form needs even dimension")

    raw_gens = document.get("generators")
    if not isinstance(raw_gens, list):
        _fail("generators", "required and must be a list of matrices")
    generators = tuple(
        _parse_matrix(g, dimension, conductor, "generators[%d]" % i)
        for i, g in enumerate(raw_gens)
    )
    return GroupSpecDocument(
        name=name,
        dimension=dimension,
        conductor=conductor,
        symplectic_form=form,
        generators=generators,
    )


def _scalar_to_json(value: CyclotomicNumber):
    rational = value.rational_value()
    if rational is not None:
        return (
            str(rational.numerator)
            if rational.denominator == 1
            else str(rational)
        )
    return {
        "conductor": value.conductor,
        "coeffs": [
            str(c.numerator) if c.denominator == 1 else str(c)
            for c in value.coeffs
        ],
    }


def _matrix_to_json(mat: ExactMatrix):
    return [
        [_scalar_to_json(mat.entry(i, j)) for j in range(mat.cols)]
        for i in range(mat.rows)
    ]


def serialize_group_spec(doc: GroupSpecDocument) -> str:
    form = doc.symplectic_form
    if isinstance(form, ExactMatrix):
        form = _matrix_to_json(form)
    payload = {
        "name": doc.name,
        "dimension": doc.dimension,
        "conductor": doc.conductor,
        "symplectic_form": form,
        "generators": [_matrix_to_json(g) for g in doc.generators],
    }
    return json.dumps(payload, indent=2) + "\n"


def spec_from_group(name: str, group: FiniteMatrixGroup) -> GroupSpecDocument:
    form = group.omega
    if form is not None and form == standard_symplectic_form(
        group.dimension, group.conductor
    ):
        form = "standard"
    return GroupSpecDocument(
        name=name,
        dimension=group.dimension,
        conductor=group.conductor,
        symplectic_form=form,
        generators=group.generators,
    )


def make_group(
    doc: GroupSpecDocument, max_order: int = DEFAULT_MAX_ORDER
) -> FiniteMatrixGroup:
    """Enumerate the group a specification describes."""
    return FiniteMatrixGroup.closure(
        doc.dimension, doc.conductor, doc.omega(), doc.generators, max_order
    )


@dataclass(frozen=True)
class AnalysisReport:
    group_order: int
    reflection_count: int
    reflection_conjugacy_class_count: int
    g0_order: int
    g0_index: int
    verdict: str
    dim2_duval_note: str | None
    z_min_codim: int
    strata: tuple | None  # per-orbit dicts, or None when not requested


def analyze(group: FiniteMatrixGroup, with_strata: bool = False) -> AnalysisReport:
    """Run the full reflection analysis on an enumerated group."""
    cen = census(group)
    reflections = set(cen.symplectic_reflections)
    classes = conjugacy_classes(group)
    class_count = sum(1 for c in classes if c[0] in reflections)
    sub = reflection_subgroup(group, cen)
    v = verdict(group, cen, sub)
    strata = None
    if with_strata:
        lattice = build_lattice(group)
        strata = tuple(
            {
                "codim": lattice.strata[orbit[0]].codim,
                "stabilizer_order": lattice.strata[orbit[0]].stabilizer_order,
                "orbit_size": len(orbit),
            }
            for orbit in lattice.orbits
        )
    return AnalysisReport(
        group_order=group.order,
        reflection_count=len(reflections),
        reflection_conjugacy_class_count=class_count,
        g0_order=sub.order,
        g0_index=v.reflection_subgroup_index,
        verdict=v.kind,
        dim2_duval_note=v.duval_note,
        z_min_codim=z_locus_min_codim(group, sub, cen),
        strata=strata,
    )


def report_to_json(report: AnalysisReport) -> str:
    payload = {
        "group_order": report.group_order,
        "reflection_count": report.reflection_count,
        "reflection_conjugacy_class_count": report.reflection_conjugacy_class_count,
        "g0_order": report.g0_order,
        "g0_index": report.g0_index,
        "verdict": report.verdict,
        "dim2_duval_note": report.dim2_duval_note,
        "z_min_codim": report.z_min_codim,
        "strata": list(report.strata) if report.strata is not None else None,
    }
    return json.dumps(payload, indent=2) + "\n"


def report_to_text(report: AnalysisReport) -> str:
    lines = [
        "group order:                  %d" % report.group_order,
        "symplectic reflections:       %d" % report.reflection_count,
        "reflection conjugacy classes: %d" % report.reflection_conjugacy_class_count,
        "reflection subgroup order:    %d (index %d)"
        % (report.g0_order, report.g0_index),
        "verdict:                      %s" % report.verdict,
        "min codim off the reflection subgroup: %d" % report.z_min_codim,
    ]
    if report.dim2_duval_note:
        lines.append("note: %s" % report.dim2_duval_note)
    if report.strata is not None:
        lines.append("strata orbits (codim, stabilizer order, orbit size):")
        for s in report.strata:
            lines.append(
                "  codim %d, stabilizer %d, orbit %d"
                % (s["codim"], s["stabilizer_order"], s["orbit_size"])
            )
    return "\n".join(lines) + "\n"
