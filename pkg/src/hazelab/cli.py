"""Command-line front end.

Subcommands: synthesize (clean image + depth -> hazy image, transmission,
sidecar), dehaze (model-based pipeline with optional correction terms),
evaluate (metric/loss report over image pairs), simulate-dynamics
(convergence comparison CSV).

A JSON config supplies defaults; explicit flags win.  Exit codes: 0 ok,
2 invalid input, 3 I/O failure, 4 numeric failure.
"""

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import io
from .airlight import estimate_airlight
from .dynamics import (DynamicsConfig, compare_augmented_vs_datadriven,
                       theta_diagonal, theta_identity, theta_random_psd,
                       write_trajectories_csv)
from .errors import InvalidInputError, UnstableStepError
from .image import as_color_triple
from .pyramid import downsample
from .quality import (loss_cnn, loss_dual_recon, loss_extreme, loss_gradient,
                      psnr, ssim)
from .restoration import AugmentedEstimate, dual_scale_dehaze, single_scale_dehaze
from .synthesis import (generate_depth, koschmieder_forward,
                        sample_protocol_params, transmission_from_depth)
from .transmission import estimate_transmission

DEPTH_KINDS = ("constant", "ramp", "step", "radial")


def _parse_triple(text, name):
    parts = str(text).split(",")
    if len(parts) != 3:
        raise InvalidInputError(f"{name} must be three comma-separated values")
    try:
        return as_color_triple([float(p) for p in parts], name)
    except ValueError as exc:
        raise InvalidInputError(f"{name}: {exc}") from exc


def _load_depth(spec, shape_hw):
    """Depth from a procedural spec ('radial:2.0', 'step:0.3,1.5', ...) or a PFM file."""
    text = str(spec)
    kind, _, arg = text.partition(":")
    if kind in DEPTH_KINDS:
        params = [float(p) for p in arg.split(",")] if arg else []
        h, w = shape_hw
        if kind == "step":
            low = params[0] if len(params) > 0 else 0.25
            high = params[1] if len(params) > 1 else 1.0
            return generate_depth("step", h, w, low=low, high=high)
        scale = params[0] if params else 1.0
        return generate_depth(kind, h, w, scale=scale)
    depth = io.read_pfm(text)
    if depth.shape != shape_hw:
        raise InvalidInputError(
            f"depth {text} has shape {depth.shape}, image is {shape_hw}"
        )
    return depth


def _setting(args, config, key, default):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config:
        return config[key]
    return default


def _worker_count(n_items):
    cap = os.environ.get("HAZELAB_THREADS", "")
    if cap:
        return max(1, min(int(cap), n_items))
    return max(1, min(os.cpu_count() or 1, n_items))


def cmd_synthesize(args, config):
    clean = io.read_image(args.input)
    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = Path(args.input).stem

    seed = int(_setting(args, config, "seed", 0))
    index = int(_setting(args, config, "index", 0))
    alpha = _setting(args, config, "alpha", None)
    airlight = _setting(args, config, "airlight", None)

    if alpha is None or airlight is None:
        params = sample_protocol_params(seed, index)
        if alpha is None:
            alpha = params.alpha
        if airlight is None:
            airlight = params.airlight
    alpha = float(alpha)
    if isinstance(airlight, str):
        airlight = _parse_triple(airlight, "airlight")
    airlight = as_color_triple(airlight, "airlight")

    depth_spec = _setting(args, config, "depth", None)
    if depth_spec is None:
        raise InvalidInputError("synthesize requires --depth (spec or PFM path)")
    depth = _load_depth(depth_spec, clean.shape[:2])

    t = transmission_from_depth(depth, alpha)
    hazy = koschmieder_forward(clean, t, airlight)

    io.write_image(out_dir / f"{stem}_hazy.png", hazy)
    io.write_pfm(out_dir / f"{stem}_t.pfm", t)
    io.write_json(out_dir / f"{stem}_params.json", {
        "alpha": alpha,
        "airlight": [float(c) for c in airlight],
        "seed": seed,
        "index": index,
        "depth": str(depth_spec),
    })
    return 0


def cmd_dehaze(args, config):
    hazy = io.read_image(args.input)
    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = Path(args.input).stem

    radius = int(_setting(args, config, "radius", 7))
    directions = int(_setting(args, config, "directions", 1000))
    stop_size = int(_setting(args, config, "stop_size", 32))

    airlight = _setting(args, config, "airlight", None)
    if isinstance(airlight, str):
        airlight = _parse_triple(airlight, "airlight")
    if airlight is None:
        airlight = estimate_airlight(hazy, stop_size)
    else:
        airlight = as_color_triple(airlight, "airlight")

    t_path = _setting(args, config, "transmission", None)
    if t_path is None:
        tm, t0, _ = estimate_transmission(hazy, airlight, radius, directions)
    else:
        tm = io.read_pfm(t_path)
        if tm.shape != hazy.shape[:2]:
            raise InvalidInputError(
                f"transmission {t_path} has shape {tm.shape}, image is {hazy.shape[:2]}"
            )
        t0 = None

    a_delta = _setting(args, config, "a_delta", None)
    if isinstance(a_delta, str):
        a_delta = _parse_triple(a_delta, "a_delta")
    elif a_delta is not None:
        a_delta = as_color_triple(a_delta, "a_delta")

    t_delta_path = _setting(args, config, "t_delta", None)
    t_delta = None
    if t_delta_path is not None:
        t_delta = io.read_pfm(t_delta_path)
        if t_delta.shape != hazy.shape[:2]:
            raise InvalidInputError(
                f"t-delta {t_delta_path} has shape {t_delta.shape}, "
                f"image is {hazy.shape[:2]}"
            )

    estimate = AugmentedEstimate(a_model=airlight, t_model=tm,
                                 a_delta=a_delta, t_delta=t_delta)
    if args.single_scale:
        restored = single_scale_dehaze(hazy, estimate, clamp=True)
    else:
        restored = dual_scale_dehaze(hazy, estimate, clamp=True)

    io.write_image(out_dir / f"{stem}_dehazed.png", restored)
    if args.save_intermediates:
        io.write_pfm(out_dir / f"{stem}_tm.pfm", tm)
        if t0 is not None:
            io.write_pfm(out_dir / f"{stem}_t0.pfm", t0)
        io.write_json(out_dir / f"{stem}_estimates.json", {
            "airlight": [float(c) for c in airlight],
            "radius": radius,
            "directions": directions,
            "stop_size": stop_size,
        })
    return 0


def _evaluate_pair(restored_path, reference_path):
    restored = io.read_image(restored_path)
    reference = io.read_image(reference_path)
    l_r = loss_dual_recon(restored, downsample(restored),
                          reference, downsample(reference))
    l_e = loss_extreme(restored, reference)
    l_t = loss_gradient(restored, reference)
    return [
        psnr(restored, reference),
        ssim(restored, reference),
        l_e,
        l_t,
        l_r,
        loss_cnn(l_r, l_e, l_t),
    ]


def cmd_evaluate(args, config):
    pairs = []
    for spec in args.pairs:
        parts = spec.split(",")
        if len(parts) != 2:
            raise InvalidInputError(
                f"pair {spec!r} must be 'restored.png,reference.png'"
            )
        pairs.append((parts[0], parts[1]))
    if not pairs:
        raise InvalidInputError("evaluate needs at least one pair")

    with ThreadPoolExecutor(max_workers=_worker_count(len(pairs))) as pool:
        rows = list(pool.map(lambda p: _evaluate_pair(*p), pairs))

    header = ("restored,reference,psnr_db,ssim,loss_extreme,loss_gradient,"
              "loss_dual_recon,loss_cnn")
    lines = [header]
    for (rest, ref), row in zip(pairs, rows):
        lines.append(",".join([rest, ref] + [f"{v:.9g}" for v in row]))
    means = np.mean(np.array(rows), axis=0)
    lines.append(",".join(["mean", ""] + [f"{v:.9g}" for v in means]))
    report = "\n".join(lines) + "\n"

    sys.stdout.write(report)
    if args.output_dir is not None:
        out_dir = Path(args.output_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        with open(out_dir / "report.csv", "w", encoding="ascii", newline="\n") as f:
            f.write(report)
    return 0


def _vector_from_spec(spec, dim, target=None):
    kind = spec.get("kind", "zeros")
    if kind == "zeros":
        return np.zeros(dim)
    if kind == "values":
        vec = np.asarray(spec["values"], dtype=np.float64)
        if vec.shape != (dim,):
            raise InvalidInputError(f"vector has shape {vec.shape}, expected ({dim},)")
        return vec
    if kind == "randn":
        rng = np.random.default_rng(int(spec.get("seed", 0)))
        return float(spec.get("scale", 1.0)) * rng.standard_normal(dim)
    if kind == "scale_target":
        if target is None:
            raise InvalidInputError("scale_target needs a target vector")
        return float(spec.get("factor", 0.5)) * target
    raise InvalidInputError(f"unknown vector kind {kind!r}")


def _theta_from_spec(spec, dim):
    kind = spec.get("kind", "identity")
    if kind == "identity":
        return float(spec.get("scale", 1.0)) * theta_identity(dim)
    if kind == "random_psd":
        return theta_random_psd(dim, int(spec.get("seed", 0)),
                                float(spec.get("scale", 1.0)))
    if kind == "diagonal":
        return theta_diagonal(spec["values"])
    raise InvalidInputError(f"unknown theta0 kind {kind!r}")


def cmd_simulate_dynamics(args, config):
    if not config:
        raise InvalidInputError("simulate-dynamics requires --config")
    dim = int(config.get("dimension", 16))
    cfg = DynamicsConfig(
        theta0=_theta_from_spec(config.get("theta0", {}), dim),
        eta=float(config.get("eta", 1.0)),
        horizon=float(config.get("horizon", 5.0)),
        step=float(config.get("step", 1e-3)),
        schedule=config.get("schedule", "constant"),
        eta_min=float(config.get("eta_min", 0.0)),
        samples=int(config.get("samples", 51)),
    )
    target = _vector_from_spec(config.get("target", {"kind": "randn"}), dim)
    i_model = _vector_from_spec(config.get("i_model", {"kind": "zeros"}), dim,
                                target=target)
    augmented, datadriven = compare_augmented_vs_datadriven(cfg, i_model, target)

    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_trajectories_csv(out_dir / "trajectories.csv", augmented, datadriven)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hazelab",
        description="Model-based single image dehazing toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output-dir", default=".", help="directory for outputs")
    common.add_argument("--config", help="JSON config supplying flag defaults")

    p_syn = sub.add_parser("synthesize", parents=[common],
                           help="render a hazy image from a clean image and depth")
    p_syn.add_argument("--input", required=True, help="clean image (PNG)")
    p_syn.add_argument("--depth",
                       help="PFM path or procedural spec, e.g. radial:2.0")
    p_syn.add_argument("--seed", type=int, help="sampler seed (default 0)")
    p_syn.add_argument("--index", type=int, help="sample index (default 0)")
    p_syn.add_argument("--alpha", type=float, help="scattering coefficient override")
    p_syn.add_argument("--airlight", help="airlight override as R,G,B")
    p_syn.set_defaults(func=cmd_synthesize)

    p_deh = sub.add_parser("dehaze", parents=[common],
                           help="restore a haze-free image")
    p_deh.add_argument("--input", required=True, help="hazy image (PNG)")
    p_deh.add_argument("--radius", type=int, help="windowed-minimum radius (default 7)")
    p_deh.add_argument("--directions", type=int,
                       help="haze-line direction count (default 1000)")
    p_deh.add_argument("--stop-size", type=int, dest="stop_size",
                       help="airlight quadtree stop size (default 32)")
    p_deh.add_argument("--airlight", help="skip estimation, use this R,G,B")
    p_deh.add_argument("--transmission",
                       help="skip estimation, use this PFM transmission map")
    p_deh.add_argument("--a-delta", dest="a_delta",
                       help="airlight correction term as R,G,B")
    p_deh.add_argument("--t-delta", dest="t_delta",
                       help="transmission correction term (PFM)")
    p_deh.add_argument("--single-scale", action="store_true",
                       help="use the single-scale baseline")
    p_deh.add_argument("--save-intermediates", action="store_true",
                       help="also write t0/tm maps and the estimate sidecar")
    p_deh.set_defaults(func=cmd_dehaze)

    p_eval = sub.add_parser("evaluate", parents=[common],
                            help="metric and loss report over image pairs")
    p_eval.add_argument("pairs", nargs="+", metavar="RESTORED,REFERENCE",
                        help="comma-separated image pair")
    p_eval.set_defaults(func=cmd_evaluate)

    p_dyn = sub.add_parser("simulate-dynamics", parents=[common],
                           help="warm-start vs cold-start convergence table")
    p_dyn.set_defaults(func=cmd_simulate_dynamics)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = io.read_json(args.config) if args.config else {}
        return args.func(args, config)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnstableStepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
