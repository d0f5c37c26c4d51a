"""``construct`` — build a G_{λ,α} member from a perturbation g by the double integral."""

import argparse
from typing import TextIO

import numpy as np

from gftlab.commands.common import disk_grid
from gftlab.schemas.analytic import PerturbationDocument, PowerSeriesDocument
from gftlab.schemas.cli import CliConfig
from gftlab.schemas.reports import ClassParams, Variant
from gftlab.services.analytic_core import polynomial_map, taylor_coefficients
from gftlab.services.class_oracles import in_G
from gftlab.services.sufficiency import (
    build_double_integral_fn,
    check_sufficient_condition,
    variant_threshold,
)
from gftlab.utils.documents import load_document
from gftlab.utils.output import write_document

NOISE_FLOOR = 1e-14


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "construct",
        parents=parents,
        help="Construct a member from a perturbation",
        description="Writes the recovered series with the condition and membership reports.",
    )
    parser.add_argument("--series", required=True, help="Perturbation JSON document (g_0 first)")
    parser.add_argument("--lambda", dest="lam", type=float, required=True)
    parser.add_argument("--alpha", type=float, required=True)
    parser.add_argument("--n", type=int, default=1)
    parser.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.THM1.value)


def _recover_series(f, n: int, count: int) -> PowerSeriesDocument:
    a = taylor_coefficients(f, count)
    a.real[np.abs(a.real) < NOISE_FLOOR] = 0.0
    a.imag[np.abs(a.imag) < NOISE_FLOOR] = 0.0
    a[1] = 1.0
    a[2 : n + 1] = 0.0
    return PowerSeriesDocument(n=n, coeffs=[(float(c.real), float(c.imag)) for c in a[1:]])


def handle(config: CliConfig, args: argparse.Namespace, stream: TextIO) -> int:
    perturbation = load_document(args.series, PerturbationDocument)
    params = ClassParams(lam=args.lam, alpha=args.alpha, n=args.n)
    variant = Variant(args.variant)
    g = polynomial_map(perturbation.complex_coeffs(), label="g")
    f = build_double_integral_fn(g, params, variant)
    grid = disk_grid(config)

    condition = check_sufficient_condition(f, params, variant, grid)
    membership = in_G(f, params, grid) if params.alpha > 0 else None
    series = _recover_series(f, params.n, params.n + 2 + len(perturbation.coeffs))

    write_document(
        {
            "series": series.model_dump(),
            "variant": variant.value,
            "threshold": variant_threshold(params, variant),
            "condition": condition.model_dump(),
            "membership": membership.model_dump() if membership else None,
        },
        stream,
    )
    ok = condition.satisfied and (membership is None or membership.satisfied)
    return 0 if ok else 1
