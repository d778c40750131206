"""Reading and writing series files, JSON report documents and sweep tables.

Formats are kept byte-stable: floats in text series and CSV tables use 17
significant digits (enough to round-trip any double), JSON documents are
written with sorted keys, and ``write -> read -> write`` is byte-identical.
Report documents embed provenance (input, config, seed, tool version) so
every published number can be regenerated.
"""

from __future__ import annotations

import csv as _csv
import json
import math
import os
from dataclasses import dataclass, field

from .errors import EmptyFile, NonFiniteSample, ParseError
from .measures import IrreversibilityReport, PairContribution, SAME_BIN
from .ordinal import EmbeddingConfig, Pattern, pattern_to_string
from .surrogates import SurrogateVerdict

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class SeriesFile:
    path: str
    format: str = "plain"  # "plain" | "csv"
    delimiter: str = ","
    column: int = 0
    header: bool = False

    def __post_init__(self):
        if self.format not in ("plain", "csv"):
            raise ValueError(f"format must be 'plain' or 'csv', got {self.format!r}")


@dataclass
class ReportDocument:
    provenance: dict
    reports: list[IrreversibilityReport] = field(default_factory=list)
    verdicts: list[SurrogateVerdict] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def _parse_sample(text: str, line_no: int) -> float:
    # Accept the unicode minus some exports use.
    cleaned = text.strip().replace("−", "-")
    try:
        value = float(cleaned)
    except ValueError:
        raise ParseError(line_no, text) from None
    if not math.isfinite(value):
        raise NonFiniteSample(f"line {line_no}: non-finite sample {text!r}")
    return value


def read_series(file: SeriesFile) -> list[float]:
    """Read samples in file order; blank lines are ignored in plain format."""
    samples: list[float] = []
    with open(file.path, "r", encoding="utf-8") as fh:
        if file.format == "plain":
            for line_no, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                samples.append(_parse_sample(line, line_no))
        else:
            reader = _csv.reader(fh, delimiter=file.delimiter)
            for line_no, row in enumerate(reader, start=1):
                if file.header and line_no == 1:
                    continue
                if not row:
                    continue
                if file.column >= len(row):
                    raise ParseError(
                        line_no, file.delimiter.join(row),
                        f"no column {file.column}",
                    )
                samples.append(_parse_sample(row[file.column], line_no))
    if len(samples) < 2:
        raise EmptyFile(f"{file.path}: found {len(samples)} samples, need >= 2")
    return samples


def write_series(series, path: str, format: str = "plain") -> None:
    """Write one sample per line, 17 significant digits, newline-terminated."""
    if format != "plain":
        raise ValueError("only the plain format is supported for writing")
    samples = [float(v) for v in series]
    if not samples:
        raise EmptyFile("refusing to write an empty series")
    for v in samples:
        if not math.isfinite(v):
            raise NonFiniteSample(f"non-finite sample {v!r}")
    _durable_write(path, "".join(_fmt(v) + "\n" for v in samples))


def _durable_write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
        fh.flush()
        os.fsync(fh.fileno())


# -- JSON document codec -------------------------------------------------------

def _config_to_dict(config: EmbeddingConfig) -> dict:
    return {
        "m": config.m,
        "tau": config.tau,
        "scheme": config.scheme,
        "tie_epsilon": config.tie_epsilon,
    }


def _config_from_dict(d: dict) -> EmbeddingConfig:
    return EmbeddingConfig(
        m=d["m"], tau=d["tau"], scheme=d["scheme"], tie_epsilon=d["tie_epsilon"]
    )


def _pair_to_dict(pair: PairContribution) -> dict:
    counterpart = (
        SAME_BIN if pair.counterpart == SAME_BIN
        else pattern_to_string(pair.counterpart)
    )
    return {
        "pattern": pattern_to_string(pair.pattern),
        "counterpart": counterpart,
        "p_forward": pair.p_forward,
        "p_counterpart": pair.p_counterpart,
        "ys": pair.ys,
    }


def _pattern_from_codec(text: str, scheme: str) -> Pattern:
    return Pattern(tuple(int(v) for v in text.split(",")), scheme)


def _pair_from_dict(d: dict, scheme: str) -> PairContribution:
    counterpart = (
        SAME_BIN if d["counterpart"] == SAME_BIN
        else _pattern_from_codec(d["counterpart"], scheme)
    )
    return PairContribution(
        pattern=_pattern_from_codec(d["pattern"], scheme),
        counterpart=counterpart,
        p_forward=d["p_forward"],
        p_counterpart=d["p_counterpart"],
        ys=d["ys"],
    )


def report_to_dict(report: IrreversibilityReport) -> dict:
    return {
        "kind": report.kind,
        "config": _config_to_dict(report.config),
        "value": report.value,
        "n_windows": report.n_windows,
        "n_observed_patterns": report.n_observed_patterns,
        "n_forbidden_counterparts": report.n_forbidden_counterparts,
        "pairs": [_pair_to_dict(p) for p in report.pairs],
    }


def report_from_dict(d: dict) -> IrreversibilityReport:
    config = _config_from_dict(d["config"])
    return IrreversibilityReport(
        kind=d["kind"],
        config=config,
        value=d["value"],
        pairs=[_pair_from_dict(p, config.scheme) for p in d["pairs"]],
        n_observed_patterns=d["n_observed_patterns"],
        n_forbidden_counterparts=d["n_forbidden_counterparts"],
        n_windows=d["n_windows"],
    )


def verdict_to_dict(verdict: SurrogateVerdict) -> dict:
    return {
        "original_value": verdict.original_value,
        "surrogate_values": list(verdict.surrogate_values),
        "p2_5": verdict.p2_5,
        "p97_5": verdict.p97_5,
        "significant_above": verdict.significant_above,
        "significant_below": verdict.significant_below,
    }


def verdict_from_dict(d: dict) -> SurrogateVerdict:
    return SurrogateVerdict(
        original_value=d["original_value"],
        surrogate_values=list(d["surrogate_values"]),
        p2_5=d["p2_5"],
        p97_5=d["p97_5"],
        significant_above=d["significant_above"],
        significant_below=d["significant_below"],
    )


def document_to_dict(doc: ReportDocument) -> dict:
    return {
        "schema_version": doc.schema_version,
        "provenance": doc.provenance,
        "reports": [report_to_dict(r) for r in doc.reports],
        "verdicts": [verdict_to_dict(v) for v in doc.verdicts],
    }


def document_from_dict(d: dict) -> ReportDocument:
    return ReportDocument(
        provenance=d["provenance"],
        reports=[report_from_dict(r) for r in d["reports"]],
        verdicts=[verdict_from_dict(v) for v in d["verdicts"]],
        schema_version=d["schema_version"],
    )


def write_report(doc: ReportDocument, path: str) -> None:
    """Serialize a document as sorted-key UTF-8 JSON; durable on return."""
    text = json.dumps(document_to_dict(doc), sort_keys=True, indent=2)
    _durable_write(path, text + "\n")


def read_report(path: str) -> ReportDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return document_from_dict(json.load(fh))


def write_sweep_csv(reports, path: str) -> None:
    """One row per (kind, m, tau) sweep cell."""
    lines = ["kind,m,tau,value,n_windows,n_forbidden"]
    for r in reports:
        lines.append(
            f"{r.kind},{r.config.m},{r.config.tau},{_fmt(r.value)},"
            f"{r.n_windows},{r.n_forbidden_counterparts}"
        )
    _durable_write(path, "\n".join(lines) + "\n")
