from __future__ import annotations

import click

from domain.conditioning import GeneralGaussian, IdealQuadrature, MeasurementSpec
from infra.cli.base import CommandGroup
from infra.enumerators.steering import QuadratureBranch
from infra.io.state_reader import STDIN, read_state_file
from infra.schemas.report import (
    Canonical,
    ConditionReport,
    Flags,
    Invariants,
    MeasurementOut,
    Physicality,
    Report,
    ScanReport,
    SymplecticSpectrum,
)


class GridType(click.ParamType):
    """Oracle grid given as "n_mu,n_mus,n_phi", every dimension at least 2."""

    name = "grid"

    def convert(self, value, param, ctx) -> tuple[int, int, int]:
        if isinstance(value, tuple):
            return value
        try:
            dims = tuple(int(part) for part in str(value).split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)
        if len(dims) != 3 or min(dims) < 2:
            self.fail(f"{value!r} must have three dimensions, each >= 2", param, ctx)
        return dims


def _source_argument() -> click.Argument:
    return click.Argument(["source"], default=STDIN, required=False)


class StateCommands(CommandGroup):
    """Commands reading a state file: analyze, scan and condition."""

    def _register_commands(self) -> None:
        """Register all state-file commands."""
        self.group.add_command(
            click.Command(
                "analyze",
                callback=self.analyze,
                params=[_source_argument()],
                help="Classify a two-mode state (path or '-' for stdin) and print a JSON report.",
            )
        )
        self.group.add_command(
            click.Command(
                "scan",
                callback=self.scan,
                params=[
                    _source_argument(),
                    click.Option(["--grid"], type=GridType(), default=None, help="n_mu,n_mus,n_phi"),
                    click.Option(
                        ["--mus-min"], type=click.FloatRange(0.0, 1.0, min_open=True, max_open=True), default=None
                    ),
                ],
                help="Brute-force scan of Gaussian measurements on mode B.",
            )
        )
        self.group.add_command(
            click.Command(
                "condition",
                callback=self.condition,
                params=[
                    _source_argument(),
                    click.Option(["--mu"], type=float, default=1.0, show_default=True, help="Seed-state purity"),
                    click.Option(["--mu-s"], type=float, default=1.0, show_default=True, help="Squeezing parameter"),
                    click.Option(["--phi"], type=float, default=0.0, show_default=True, help="Measurement phase"),
                    click.Option(["--homodyne"], is_flag=True, help="Ideal quadrature measurement at --phi"),
                    click.Option(
                        ["--quadrature"],
                        type=click.Choice([b.value for b in QuadratureBranch]),
                        default=None,
                        help="Ideal quadrature branch of the canonical form",
                    ),
                ],
                help="Conditional state of mode A after a Gaussian measurement on mode B.",
            )
        )

    def analyze(self, source: str) -> None:
        self.run("analyze", self._analyze, source=source)

    def _analyze(self, source: str) -> None:
        state_file = read_state_file(source)
        result = self.use_case().analyze(state_file.to_state())
        steering, canon, inv, phys = result.steering, result.canonical, result.invariants, result.physicality
        self.emit(
            Report(
                input=state_file.model_dump(exclude_none=True),
                physicality=Physicality(
                    physical=phys.physical,
                    symmetric=phys.symmetric,
                    ur_satisfied=phys.ur_satisfied,
                    min_ur_eigenvalue=phys.min_ur_eigenvalue,
                ),
                canonical=Canonical(a=canon.a, b=canon.b, c1=canon.c1, c2=canon.c2),
                invariants=Invariants(I1=inv.I1, I2=inv.I2, I3=inv.I3, I4=inv.I4),
                lambda_wns=steering.lambda_wns,
                lambda_sns=steering.lambda_sns,
                epr_product=steering.epr_product,
                symplectic_spectrum=SymplecticSpectrum(
                    nu_minus=result.spectrum[0], nu_plus=result.spectrum[1], ppt_nu_minus=result.ppt_nu_minus
                ),
                flags=Flags(
                    wns=steering.wns,
                    sns=steering.sns,
                    epr_b_to_a=steering.epr_b_to_a,
                    epr_a_to_b=steering.epr_a_to_b,
                    entangled=steering.entangled,
                    marginal=steering.marginal,
                ),
            )
        )

    def scan(self, source: str, grid: tuple[int, int, int] | None, mus_min: float | None) -> None:
        self.run("scan", self._scan, source=source, grid=grid, mus_min=mus_min)

    def _scan(self, source: str, grid: tuple[int, int, int] | None, mus_min: float | None) -> None:
        cfg = self.config()
        state = read_state_file(source).to_state()
        result, lam = self.use_case().scan(state, grid, mus_min)
        spec = result.best_spec
        self.emit(
            ScanReport(
                best_lambda=result.best_lambda,
                best_measurement=MeasurementOut(mu=spec.mu, mu_s=spec.mu_s, phi=spec.phi),
                grid=result.grid_dims,
                mus_min=cfg.SCAN_MU_S_MIN if mus_min is None else mus_min,
                monotone_in_mus=result.monotone_in_mus,
                lambda_wns=lam,
                gap=result.best_lambda - lam,
            )
        )

    def condition(
        self, source: str, mu: float, mu_s: float, phi: float, homodyne: bool, quadrature: str | None
    ) -> None:
        self.run(
            "condition", self._condition, source=source, mu=mu, mu_s=mu_s, phi=phi, homodyne=homodyne, quadrature=quadrature
        )

    def _condition(
        self, source: str, mu: float, mu_s: float, phi: float, homodyne: bool, quadrature: str | None
    ) -> None:
        state_file = read_state_file(source)
        measurement: MeasurementSpec | QuadratureBranch
        if quadrature is not None:
            measurement = QuadratureBranch(quadrature)
            described = {"kind": "quadrature", "branch": measurement.value}
        elif homodyne:
            measurement = IdealQuadrature(phi=phi)
            described = {"kind": "homodyne", "phi": phi}
        else:
            measurement = GeneralGaussian(mu=mu, mu_s=mu_s, phi=phi)
            described = {"kind": "gaussian", "mu": mu, "mu_s": mu_s, "phi": phi}
        conditional = self.use_case().condition(state_file.to_state(), measurement)
        params = conditional.params
        self.emit(
            ConditionReport(
                input=state_file.model_dump(exclude_none=True),
                measurement=described,
                cm=conditional.cm.tolist(),
                mu_c=params.mu_c,
                mu_sc=params.mu_sc,
                phi_c=params.phi_c,
                lambda_minus=conditional.lambda_minus,
                depth=conditional.depth,
                nonclassical=conditional.nonclassical,
            )
        )
