"""Tests for input documents, verdict schemas and error responses"""

import pytest

from qwalk.cli.commands.analyze import build_report
from qwalk.core.exceptions import InputParseError, ParameterError
from qwalk.models.verdict import VerdictKind
from qwalk.models.walk import WalkKind
from qwalk.schemas import (
    DesignSchema,
    ErrorResponse,
    FramesSchema,
    GraphSchema,
    ReportSchema,
    SzegedySchema,
    VerdictSchema,
    load_document,
    parse_document,
)
from qwalk.schemas.family import CycleSpec

from .conftest import Analysis


def test_kind_defaults_to_graph() -> None:
    """A document without kind is a graph"""
    document = parse_document({"n": 2, "edges": [[0, 1]]})

    assert isinstance(document, GraphSchema)
    assert document.to_domain().edge_count == 1


def test_edges_with_multiplicity() -> None:
    """Three-element edges carry a multiplicity"""
    document = parse_document({"kind": "graph", "n": 2, "edges": [[0, 1, 3]]})

    assert isinstance(document, GraphSchema)
    assert document.to_domain().edge_count == 3


def test_malformed_edge_names_the_field() -> None:
    """Validation errors become InputParseError with a field path"""
    with pytest.raises(InputParseError) as exc_info:
        parse_document({"kind": "graph", "n": 3, "edges": [[0, 1, 2, 3]]})

    assert exc_info.value.exit_code == 2
    assert exc_info.value.details["field"].startswith("graph.edges")


def test_non_object_documents_are_rejected() -> None:
    """Top-level arrays are not documents"""
    with pytest.raises(InputParseError):
        parse_document([1, 2])
    with pytest.raises(InputParseError):
        load_document("{not json")


def test_other_kinds_are_families() -> None:
    """Unknown input kinds are read as family specs"""
    assert parse_document({"kind": "cycle", "n": 5}) == CycleSpec(n=5)
    with pytest.raises(ParameterError):
        parse_document({"kind": "no-such-family"})


def test_frames_accept_capital_names() -> None:
    """Frame documents use N and M as keys"""
    document = parse_document({"kind": "frames", "N": [[1.0], [0.0]], "M": [[0.0], [1.0]]})

    assert isinstance(document, FramesSchema)
    assert document.to_domain().dim == 1


def test_szegedy_document_builds_a_walk() -> None:
    """Szegedy documents carry both transition families"""
    document = parse_document({"kind": "szegedy", "p": [[0.5, 0.5], [0.5, 0.5]], "q": [[0.5, 0.5], [0.5, 0.5]]})

    assert isinstance(document, SzegedySchema)
    assert document.to_domain().n_states == 4


def test_design_document() -> None:
    """Design documents validate to parameters and build the incidence graph"""
    document = parse_document({"kind": "design", "v": 3, "blocks": [[0, 1], [0, 2], [1, 2]]})

    assert isinstance(document, DesignSchema)
    params = document.to_domain()
    assert (params.b, params.r, params.k, params.lam) == (3, 2, 2, 1)
    assert document.incidence_graph().n_vertices == 6


def test_verdict_schema_round_trip(cycle6: Analysis) -> None:
    """Verdicts survive conversion to and from their schema"""
    _, spec, service = cycle6
    verdict = service.decide_pair(spec, 0, 3)

    schema = VerdictSchema.from_domain(verdict)
    restored = schema.to_domain()

    assert schema.tau == "3"
    assert schema.pair == (0, 3)
    assert restored.kind == VerdictKind.PERFECT
    assert restored.tau == verdict.tau
    assert [c.pq for c in restored.certificates] == [c.pq for c in verdict.certificates]
    assert restored.oracle == verdict.oracle


def test_csv_row(cycle6: Analysis) -> None:
    """CSV rows flatten the verdict with blank optional fields"""
    _, spec, service = cycle6
    row = VerdictSchema.from_domain(service.decide_periodicity(spec, 1)).csv_row()

    assert row["u"] == row["v"] == 1
    assert row["kind"] == "Periodic"
    assert row["tau"] == "6"
    assert row["reason"] == ""


def test_report_schema_serializes(cycle6: Analysis) -> None:
    """Reports dump to JSON and validate back"""
    _, spec, service = cycle6
    verdicts = service.decide_all(spec, [(0, 3)], vertices=[0])
    report = build_report("abc", WalkKind.ARC_REVERSAL, spec, verdicts, service.options)

    restored = ReportSchema.model_validate_json(report.model_dump_json())

    assert restored == report
    assert restored.oracle.checked == 2
    assert restored.oracle.failed == 0
    assert restored.spectrum.charpoly is not None


def test_error_response_from_exception() -> None:
    """Errors render as one line with their details"""
    response = ErrorResponse.from_exception(ParameterError("Bad grid", n=0))

    assert response.exit_code == 3
    assert response.one_line() == "ParameterError: Bad grid (n=0)"
    assert ErrorResponse.from_exception(InputParseError("Empty")).one_line() == "InputParseError: Empty"
