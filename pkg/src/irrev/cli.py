"""Command-line frontend.

Exit codes: 0 success, 1 usage error, 2 data error (unreadable or too-short
input), 3 numeric error (diverged orbit, degenerate series). Flags win over
``IRREV_``-prefixed environment variables, which win over built-in defaults.
All randomness requires an explicit seed.
"""

from __future__ import annotations

import sys

import click

from . import io as dio
from . import __version__
from .errors import DataError, NumericError
from .measures import KIND_AIR, KIND_TIR, measure, sweep
from .models import ModelSpec, generate as generate_series, paper_length
from .ordinal import EmbeddingConfig
from .surrogates import IaaftParams, percentile_nearest_rank, significance_test

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3
EXIT_CHECK_FAILED = 4


def _parse_range(text: str) -> list[int]:
    """Parse '2..6' (inclusive) or a single integer."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
        if not values:
            raise click.UsageError(f"empty range {text!r}")
        return values
    return [int(text)]


def _kinds(measure_flag: str) -> list[str]:
    if measure_flag == "both":
        return [KIND_TIR, KIND_AIR]
    if measure_flag in (KIND_TIR, KIND_AIR):
        return [measure_flag]
    raise click.UsageError(f"--measure must be TIR, AIR or both, got {measure_flag!r}")


def _series_file(path, fmt, delimiter, column, header) -> dio.SeriesFile:
    return dio.SeriesFile(
        path=path, format=fmt, delimiter=delimiter, column=column, header=header
    )


def _input_options(f):
    f = click.option("--format", "fmt", type=click.Choice(["plain", "csv"]),
                     default="plain", show_default=True)(f)
    f = click.option("--delimiter", default=",", show_default=True)(f)
    f = click.option("--column", type=int, default=0, show_default=True,
                     help="0-based CSV column index")(f)
    f = click.option("--header/--no-header", default=False,
                     help="skip the first CSV row")(f)
    return f


@click.group()
@click.version_option(__version__)
def cli():
    """Permutation time/amplitude irreversibility toolkit."""


@cli.command()
@click.argument("model", type=click.Choice(["logistic", "henon", "gaussian"]))
@click.option("--n", type=int, default=paper_length(), show_default=True)
@click.option("--burn-in", type=int, default=0, show_default=True)
@click.option("--r", type=float, default=4.0, show_default=True)
@click.option("--x1", type=float, default=0.01, show_default=True)
@click.option("--y1", type=float, default=0.01, show_default=True)
@click.option("--alpha", type=float, default=1.4, show_default=True)
@click.option("--beta", type=float, default=0.3, show_default=True)
@click.option("--mean", type=float, default=0.0, show_default=True)
@click.option("--sd", type=float, default=1.0, show_default=True)
@click.option("--seed", type=int, default=None, help="required for gaussian")
@click.option("--out", required=True, type=click.Path(dir_okay=False))
def generate(model, n, burn_in, r, x1, y1, alpha, beta, mean, sd, seed, out):
    """Generate a benchmark model series and write it as a plain file."""
    if model == "logistic":
        params = {"r": r, "x1": x1}
    elif model == "henon":
        params = {"alpha": alpha, "beta": beta, "x1": x1, "y1": y1}
    else:
        if seed is None:
            raise click.UsageError("gaussian requires --seed (no silent seeding)")
        params = {"mean": mean, "sd": sd, "seed": seed}
    series = generate_series(ModelSpec(kind=model, n=n, burn_in=burn_in,
                                       params=params))
    dio.write_series(series, out)
    click.echo(f"{model} {n} {seed if seed is not None else '-'}")


def _embedding(m, tau, scheme, tie_epsilon) -> EmbeddingConfig:
    try:
        return EmbeddingConfig(m=m, tau=tau, scheme=scheme,
                               tie_epsilon=tie_epsilon)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


@cli.command()
@click.option("--input", "input_path", required=True,
              type=click.Path(exists=False, dir_okay=False))
@_input_options
@click.option("--measure", "measure_flag", default="both", show_default=True)
@click.option("--m", type=int, required=True)
@click.option("--tau", type=int, default=1, show_default=True)
@click.option("--scheme", type=click.Choice(["original", "equal-value"]),
              default="equal-value", show_default=True)
@click.option("--tie-epsilon", type=float, default=0.0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="write a JSON report document")
def analyze(input_path, fmt, delimiter, column, header, measure_flag, m, tau,
            scheme, tie_epsilon, out):
    """Compute TIR and/or AIR for a series file."""
    series = dio.read_series(_series_file(input_path, fmt, delimiter, column,
                                          header))
    config = _embedding(m, tau, scheme, tie_epsilon)
    reports = [measure(series, config, kind) for kind in _kinds(measure_flag)]
    for rep in reports:
        click.echo(f"{rep.kind} {m} {tau} {rep.value:.17g}")
    if out:
        doc = dio.ReportDocument(
            provenance={"input": input_path,
                        "config": dio._config_to_dict(config),
                        "tool_version": __version__},
            reports=reports,
        )
        dio.write_report(doc, out)


@cli.command("sweep")
@click.option("--input", "input_path", required=True,
              type=click.Path(exists=False, dir_okay=False))
@_input_options
@click.option("--m", "m_range", required=True, help="single value or a..b")
@click.option("--tau", "tau_range", default="1", show_default=True,
              help="single value or a..b")
@click.option("--measure", "measure_flag", default="both", show_default=True)
@click.option("--scheme", type=click.Choice(["original", "equal-value"]),
              default="equal-value", show_default=True)
@click.option("--tie-epsilon", type=float, default=0.0, show_default=True)
@click.option("--out", required=True, type=click.Path(dir_okay=False),
              help="CSV table output")
def sweep_cmd(input_path, fmt, delimiter, column, header, m_range, tau_range,
              measure_flag, scheme, tie_epsilon, out):
    """Sweep a (kind, m, tau) grid and emit a CSV table."""
    series = dio.read_series(_series_file(input_path, fmt, delimiter, column,
                                          header))
    reports = sweep(series, _parse_range(m_range), _parse_range(tau_range),
                    scheme=scheme, kinds=_kinds(measure_flag),
                    tie_epsilon=tie_epsilon)
    dio.write_sweep_csv(reports, out)
    for rep in reports:
        click.echo(f"{rep.kind} {rep.config.m} {rep.config.tau} "
                   f"{rep.value:.17g}")


@cli.command("surrogate-test")
@click.option("--input", "input_path", required=True,
              type=click.Path(exists=False, dir_okay=False))
@_input_options
@click.option("--measure", "measure_flag", default=KIND_TIR, show_default=True,
              type=click.Choice([KIND_TIR, KIND_AIR]))
@click.option("--m", type=int, required=True)
@click.option("--tau", type=int, default=1, show_default=True)
@click.option("--scheme", type=click.Choice(["original", "equal-value"]),
              default="equal-value", show_default=True)
@click.option("--tie-epsilon", type=float, default=0.0, show_default=True)
@click.option("--n-surrogates", type=int, default=100, show_default=True)
@click.option("--max-iterations", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def surrogate_test(input_path, fmt, delimiter, column, header, measure_flag,
                   m, tau, scheme, tie_epsilon, n_surrogates, max_iterations,
                   seed, out):
    """Test a measure against an IAAFT surrogate ensemble."""
    series = dio.read_series(_series_file(input_path, fmt, delimiter, column,
                                          header))
    config = _embedding(m, tau, scheme, tie_epsilon)
    params = IaaftParams(max_iterations=max_iterations, seed=seed,
                         n_surrogates=n_surrogates)
    verdict = significance_test(series, config, measure_flag, params)
    click.echo(
        f"{measure_flag} {m} {tau} {verdict.original_value:.17g} "
        f"{verdict.p2_5:.17g} {verdict.p97_5:.17g} "
        f"{str(verdict.significant_above).lower()} "
        f"{str(verdict.significant_below).lower()}"
    )
    if out:
        doc = dio.ReportDocument(
            provenance={"input": input_path, "seed": seed,
                        "n_surrogates": n_surrogates,
                        "config": dio._config_to_dict(config),
                        "tool_version": __version__},
            verdicts=[verdict],
        )
        dio.write_report(doc, out)


def _repro_checks(values, ms):
    """Model-series expectations; values maps (series, kind, m) -> value.

    Checks involving dimensions outside ``ms`` are skipped so reduced runs
    (smaller --m-max) stay usable.
    """

    def tir(s, m):
        return values[(s, KIND_TIR, m)]

    def air(s, m):
        return values[(s, KIND_AIR, m)]

    checks = []
    if 7 in ms:
        checks.append(("logistic-m7-tir-is-1", tir("logistic", 7) == 1.0))
        checks.append(("logistic-m7-air-nonzero",
                       0.0 < air("logistic", 7) < 1.0))
    for s in ("logistic", "henon"):
        for m in (3, 4, 5):
            if m in ms:
                checks.append((f"{s}-m{m}-tir-gt-air", tir(s, m) > air(s, m)))
    for s in ("logistic", "henon", "gaussian"):
        checks.append((f"{s}-m2-tir-eq-air",
                       abs(tir(s, 2) - air(s, 2)) <= 1e-12))
    if 4 in ms and 6 in ms:
        checks.append(
            ("logistic-tir-air-gap-shrinks",
             abs(tir("logistic", 6) - air("logistic", 6))
             <= abs(tir("logistic", 4) - air("logistic", 4)))
        )
    return checks


@cli.command("repro-models")
@click.option("--out-dir", required=True,
              type=click.Path(file_okay=False, exists=False))
@click.option("--seed", type=int, required=True)
@click.option("--n-surrogates", type=int, default=100, show_default=True,
              help="500 reproduces the published ensemble size")
@click.option("--m-max", type=int, default=7, show_default=True)
@click.option("--n", type=int, default=None,
              help="series length (default: the benchmark length 100800)")
def repro_models(out_dir, seed, n_surrogates, m_max, n):
    """Recompute the model-series benchmark (three series, m = 2..7, tau = 1)."""
    import os

    from .surrogates import iaaft

    os.makedirs(out_dir, exist_ok=True)
    if n is None:
        n = paper_length()
    series_by_name = {
        "logistic": generate_series(ModelSpec("logistic", n)),
        "henon": generate_series(ModelSpec("henon", n)),
        "gaussian": generate_series(
            ModelSpec("gaussian", n, params={"seed": seed})),
    }
    params = IaaftParams(seed=seed, n_surrogates=n_surrogates)
    ms = list(range(2, m_max + 1))

    values = {}
    bands = {}
    rows = ["series,kind,m,value,p2_5,p97_5"]
    reports = []
    for name, series in series_by_name.items():
        dio.write_series(series, os.path.join(out_dir, f"{name}.txt"))
        surrogates = [iaaft(series, params, i)[0]
                      for i in range(n_surrogates)]
        for m in ms:
            config = EmbeddingConfig(m=m, tau=1)
            for kind in (KIND_TIR, KIND_AIR):
                rep = measure(series, config, kind)
                values[(name, kind, m)] = rep.value
                reports.append(rep)
                ensemble = [measure(s, config, kind).value
                            for s in surrogates]
                lo = percentile_nearest_rank(ensemble, 2.5)
                hi = percentile_nearest_rank(ensemble, 97.5)
                bands[(name, kind, m)] = (lo, hi)
                rows.append(f"{name},{kind},{m},{rep.value:.17g},"
                            f"{lo:.17g},{hi:.17g}")
    dio._durable_write(os.path.join(out_dir, "table.csv"),
                       "\n".join(rows) + "\n")
    doc = dio.ReportDocument(
        provenance={"seed": seed, "n_surrogates": n_surrogates, "n": n,
                    "tau": 1, "scheme": "equal-value",
                    "tool_version": __version__},
        reports=reports,
    )
    dio.write_report(doc, os.path.join(out_dir, "report.json"))

    all_ok = True
    for label, ok in _repro_checks(values, ms):
        click.echo(f"{'PASS' if ok else 'FAIL'} {label}")
        all_ok = all_ok and ok
    if not all_ok:
        sys.exit(EXIT_CHECK_FAILED)


def main(argv=None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False,
                 auto_envvar_prefix="IRREV")
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except DataError as exc:
        click.echo(f"data error: {exc}", err=True)
        return EXIT_DATA
    except NumericError as exc:
        click.echo(f"numeric error: {exc}", err=True)
        return EXIT_NUMERIC
    except OSError as exc:
        click.echo(f"io error: {exc}", err=True)
        return EXIT_DATA
    except SystemExit as exc:
        return int(exc.code or 0)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
