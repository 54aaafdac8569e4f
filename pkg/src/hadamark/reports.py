"""Serialization of run records to JSON and CSV.

Report writing is deterministic: fixed key order, floats via Python's
shortest round-trip repr, newline-terminated output.  Running the same
inputs twice must produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .codec import EmbedResult
from .image import PadInfo
from .metrics import QualityReport
from .scaling import ScalingParams

__all__ = [
    "SCHEMA_VERSION",
    "CSV_COLUMNS",
    "BatchReport",
    "scaling_dict",
    "pad_dict",
    "embed_sidecar",
    "extract_sidecar",
    "quality_dict",
    "batch_report",
    "to_json_bytes",
    "write_json",
    "write_csv",
    "read_json",
]

SCHEMA_VERSION = 1

# Flattened column order for CSV emission of batch rows.
CSV_COLUMNS = [
    "schema_version",
    "tool_version",
    "ssim_preset",
    "image_id",
    "m",
    "mu",
    "alpha1",
    "alpha",
    "uiqi",
    "ssim",
    "ncc",
    "clip_fraction",
    "attack_kind",
    "attack_magnitude",
    "attack_seed",
    "error",
]


def scaling_dict(params: ScalingParams) -> dict[str, Any]:
    return {
        "mu": float(params.mu),
        "alpha1": float(params.alpha1),
        "m": int(params.m),
        "alpha": float(params.alpha),
    }


def pad_dict(pad: PadInfo) -> dict[str, Any]:
    return {
        "orig_width": int(pad.orig_width),
        "orig_height": int(pad.orig_height),
        "padded_size": int(pad.padded_size),
        "offset_x": int(pad.offset_x),
        "offset_y": int(pad.offset_y),
    }


def _envelope(command: str) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": command,
    }


def embed_sidecar(result: EmbedResult) -> dict[str, Any]:
    """Audit record written next to an embedded image."""
    doc = _envelope("embed")
    doc["scaling"] = scaling_dict(result.params)
    doc["clip_fraction"] = float(result.clip_fraction)
    doc["pad"] = pad_dict(result.pad)
    return doc


def extract_sidecar(params: ScalingParams, ncc: float | None = None) -> dict[str, Any]:
    """Audit record written next to an extracted mark estimate.

    The correlation score is present only when a reference mark was
    available to compare against.
    """
    doc = _envelope("extract")
    doc["scaling"] = scaling_dict(params)
    if ncc is not None:
        doc["ncc"] = float(ncc)
    return doc


def quality_dict(report: QualityReport) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "uiqi": float(report.uiqi),
        "ssim": float(report.ssim),
    }
    if report.ssim_preset is not None:
        doc["ssim_preset"] = report.ssim_preset
    if report.ncc is not None:
        doc["ncc"] = float(report.ncc)
    if report.clip_fraction is not None:
        doc["clip_fraction"] = float(report.clip_fraction)
    if report.m is not None:
        doc["m"] = int(report.m)
    if report.alpha is not None:
        doc["alpha"] = float(report.alpha)
    doc["uiqi_degenerate"] = bool(report.uiqi_degenerate)
    return doc


@dataclass(frozen=True)
class BatchReport:
    """Batch run results: one row per (image, m) pair, manifest order."""

    rows: list[dict[str, Any]]
    ssim_preset: str
    schema_version: int = SCHEMA_VERSION
    tool_version: str = field(default=__version__)

    def to_doc(self) -> dict[str, Any]:
        return {
            "schema_version": int(self.schema_version),
            "tool_version": self.tool_version,
            "ssim_preset": self.ssim_preset,
            "rows": self.rows,
        }


def batch_report(rows: list[dict[str, Any]], ssim_preset: str) -> dict[str, Any]:
    return BatchReport(rows=rows, ssim_preset=ssim_preset).to_doc()


def to_json_bytes(doc: dict[str, Any]) -> bytes:
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def write_json(path: str, doc: dict[str, Any]) -> None:
    with open(path, "wb") as f:
        f.write(to_json_bytes(doc))


def _csv_cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return value


def write_csv(path: str, report: dict[str, Any]) -> None:
    """Flatten a batch report into one CSV row per batch entry."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    shared = {
        "schema_version": report["schema_version"],
        "tool_version": report["tool_version"],
        "ssim_preset": report["ssim_preset"],
    }
    for row in report["rows"]:
        flat = dict(shared)
        flat.update({k: row.get(k) for k in ("image_id", "m", "mu", "alpha1", "alpha", "uiqi", "ssim", "ncc", "clip_fraction", "error")})
        attack = row.get("attack")
        if attack:
            flat["attack_kind"] = attack.get("kind")
            flat["attack_magnitude"] = attack.get("magnitude")
            flat["attack_seed"] = attack.get("seed")
        writer.writerow([_csv_cell(flat.get(col)) for col in CSV_COLUMNS])
    with open(path, "wb") as f:
        f.write(buf.getvalue().encode("utf-8"))


def read_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)
