"""Command line front end: embed, extract, quality, attack, report.

Exit codes: 0 success, 2 I/O or decode failure, 3 validation failure
(bad dimensions, out-of-range m, malformed manifest), 4 internal error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any

import numpy as np

from . import __version__
from .attacks import ATTACK_KINDS, AttackSpec, apply_attack
from .codec import embed, embed_image, extract, prepare_watermark
from .fileio import ImageFormatError, load_image, save_image
from .image import PadInfo, crop, denormalize, to_luminance
from .metrics import SSIM_PRESETS, QualityReport, ncc, ssim, uiqi, uiqi_is_degenerate
from .reports import (
    batch_report,
    embed_sidecar,
    extract_sidecar,
    quality_dict,
    read_json,
    to_json_bytes,
    write_csv,
    write_json,
)

__all__ = ["main", "build_parser"]

M_MAX = 6


class CliUsageError(ValueError):
    """Bad command line usage, mapped to the validation exit code."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> Any:  # noqa: D102 (argparse override)
        raise CliUsageError(message)


def _check_m(m: int) -> int:
    if not 0 <= m <= M_MAX:
        raise ValueError(f"m must be between 0 and {M_MAX}")
    return int(m)


def cmd_embed(args: argparse.Namespace) -> int:
    m = _check_m(args.m)
    cover = load_image(args.cover)
    mark = load_image(args.watermark)
    out_img, result = embed_image(cover, mark, m)
    save_image(args.out, out_img)
    sidecar = args.sidecar if args.sidecar else args.out + ".json"
    write_json(sidecar, embed_sidecar(result))
    print(
        f"embedded m={m} alpha={result.params.alpha!r} "
        f"clip_fraction={result.clip_fraction!r} -> {args.out}"
    )
    return 0


def cmd_extract(args: argparse.Namespace) -> int:
    m = _check_m(args.m)
    cover_y = to_luminance(load_image(args.cover))
    marked_y = to_luminance(load_image(args.watermarked))
    result = extract(cover_y, marked_y, m)
    save_image(args.out, denormalize(result.watermark_estimate))
    score = None
    if args.reference:
        pad = PadInfo.for_shape(*cover_y.shape)
        reference = crop(prepare_watermark(load_image(args.reference), pad), pad)
        score = ncc(reference, result.watermark_estimate)
    write_json(args.out + ".json", extract_sidecar(result.params, score))
    line = f"extracted m={m} -> {args.out}"
    if score is not None:
        line += f" ncc={score!r}"
    print(line)
    return 0


def cmd_quality(args: argparse.Namespace) -> int:
    ref = to_luminance(load_image(args.ref))
    test = to_luminance(load_image(args.test))
    constants = SSIM_PRESETS[args.ssim_preset]
    report = QualityReport(
        uiqi=uiqi(ref, test),
        ssim=ssim(ref * 255.0, test * 255.0, constants),
        ssim_preset=args.ssim_preset,
        uiqi_degenerate=uiqi_is_degenerate(ref, test),
    )
    sys.stdout.write(to_json_bytes(quality_dict(report)).decode("utf-8"))
    return 0


def cmd_attack(args: argparse.Namespace) -> int:
    img = load_image(args.infile)
    spec = AttackSpec(kind=args.kind, magnitude=args.magnitude, seed=args.seed)
    attacked = apply_attack(img.astype(np.float64) / 255.0, spec)
    save_image(args.out, denormalize(attacked))
    print(f"attacked {args.kind} magnitude={args.magnitude!r} -> {args.out}")
    return 0


def _manifest_entries(manifest: Any) -> tuple[list[dict[str, str]], list[int], dict | None, str]:
    if not isinstance(manifest, dict) or not isinstance(manifest.get("pairs"), list):
        raise ValueError("manifest must be an object with a 'pairs' list")
    pairs = []
    for entry in manifest["pairs"]:
        if not isinstance(entry, dict) or not all(
            isinstance(entry.get(k), str) for k in ("id", "cover", "watermark")
        ):
            raise ValueError("each pair needs string fields id, cover, watermark")
        pairs.append(entry)
    m_values = manifest.get("m_values", [0, 1, 2])
    if not isinstance(m_values, list) or not m_values:
        raise ValueError("m_values must be a nonempty list")
    m_values = [_check_m(m) for m in m_values]
    attack = manifest.get("attack")
    if attack is not None:
        if not isinstance(attack, dict) or "kind" not in attack or "magnitude" not in attack:
            raise ValueError("attack must be an object with kind and magnitude")
        # validates kind/magnitude/seed up front
        AttackSpec(
            kind=attack["kind"],
            magnitude=float(attack["magnitude"]),
            seed=int(attack.get("seed", 0)),
        )
    preset = manifest.get("ssim_preset", "standard")
    if preset not in SSIM_PRESETS:
        raise ValueError(f"unknown ssim_preset {preset!r}")
    return pairs, m_values, attack, preset


def _report_row(
    image_id: str, y: np.ndarray, prepared: np.ndarray, reference: np.ndarray,
    m: int, attack: dict | None, preset: str,
) -> dict[str, Any]:
    result = embed(y, prepared, m)
    marked = result.watermarked_y
    row: dict[str, Any] = {
        "image_id": image_id,
        "m": m,
        "mu": float(result.params.mu),
        "alpha1": float(result.params.alpha1),
        "alpha": float(result.params.alpha),
        "uiqi": float(uiqi(y, marked)),
        "ssim": float(ssim(y * 255.0, marked * 255.0, SSIM_PRESETS[preset])),
        "clip_fraction": float(result.clip_fraction),
    }
    if attack is not None:
        spec = AttackSpec(
            kind=attack["kind"],
            magnitude=float(attack["magnitude"]),
            seed=int(attack.get("seed", 0)),
        )
        marked = apply_attack(marked, spec)
        row["attack"] = {
            "kind": spec.kind,
            "magnitude": float(spec.magnitude),
            "seed": int(spec.seed),
        }
    estimate = extract(y, marked, m).watermark_estimate
    try:
        row["ncc"] = float(ncc(reference, estimate))
    except ValueError:
        row["ncc"] = None  # constant reference mark has no correlation score
    return row


def cmd_report(args: argparse.Namespace) -> int:
    manifest = read_json(args.manifest)
    pairs, m_values, attack, preset = _manifest_entries(manifest)
    rows: list[dict[str, Any]] = []
    errors = 0
    total = 0
    for pair in pairs:
        try:
            y = to_luminance(load_image(pair["cover"]))
            pad = PadInfo.for_shape(*y.shape)
            prepared = prepare_watermark(load_image(pair["watermark"]), pad)
            reference = crop(prepared, pad)
        except Exception as exc:
            total += len(m_values)
            errors += len(m_values)
            rows.append({"image_id": pair["id"], "error": str(exc)})
            print(f"warning: {pair['id']}: {exc}", file=sys.stderr)
            continue
        for m in m_values:
            total += 1
            try:
                rows.append(_report_row(pair["id"], y, prepared, reference, m, attack, preset))
            except Exception as exc:
                errors += 1
                rows.append({"image_id": pair["id"], "m": m, "error": str(exc)})
                print(f"warning: {pair['id']} m={m}: {exc}", file=sys.stderr)
    report = batch_report(rows, preset)
    if args.emit == "json":
        write_json(args.out, report)
    else:
        write_csv(args.out, report)
    print(f"wrote {len(rows)} rows to {args.out}")
    if total > 0 and errors == total:
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hadamark", description=__doc__)
    parser.add_argument("--version", action="version", version=f"hadamark {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="embed a watermark into a cover image")
    p.add_argument("--cover", required=True)
    p.add_argument("--watermark", required=True)
    p.add_argument("--m", type=int, required=True, help="attenuation level, 0..6")
    p.add_argument("--out", required=True)
    p.add_argument("--sidecar", help="sidecar JSON path (default: <out>.json)")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover a watermark estimate")
    p.add_argument("--cover", required=True)
    p.add_argument("--watermarked", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--reference", help="original mark, enables the ncc score")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("quality", help="compare two images")
    p.add_argument("--ref", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--ssim-preset", choices=sorted(SSIM_PRESETS), default="standard")
    p.set_defaults(func=cmd_quality)

    p = sub.add_parser("attack", help="degrade an image deterministically")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--kind", choices=ATTACK_KINDS, required=True)
    p.add_argument("--magnitude", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("report", help="batch embed/extract metrics over a manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--emit", choices=["json", "csv"], default="json")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return int(args.func(args))
    except (OSError, ImageFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
