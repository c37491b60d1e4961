"""Declarative run configuration: a line-oriented key = value format.

Documents consist of optional top-level keys (``subcommand``, ``model``)
followed by ``[section]`` headers with ``key = value`` lines.  Blank lines
and full-line ``#`` comments are ignored.  Unknown sections or keys are a
hard error, as are sections that do not apply to the chosen subcommand.
:func:`dumps_config` emits the effective (post-defaults) configuration in a
form that :func:`parse_config` reads back to an identical RunConfig.
"""

from dataclasses import dataclass

from .averaging import CouplingModel, QuadratureRule, QuadratureSpec, StaticNoiseParams
from .errors import ParseError, ValidationError
from .model import Realization, SystemParams
from .scan import SWEEP_AXES, TimeGrid

SUBCOMMANDS = ("evolve", "sweep", "compare", "detect", "trace")
TRACE_SOURCES = ("ccm", "dcm", "noiseless")

_COMMON_SECTIONS = ("system", "noise", "grid", "quadrature", "output")
_SECTIONS_BY_SUBCOMMAND = {
    "evolve": _COMMON_SECTIONS,
    "compare": _COMMON_SECTIONS,
    "sweep": _COMMON_SECTIONS + ("sweep",),
    "detect": _COMMON_SECTIONS + ("detect",),
    "trace": _COMMON_SECTIONS + ("trace",),
}
_KEYS = {
    "": ("subcommand", "model"),
    "system": ("eps_a", "eps_b", "lambda", "r"),
    "noise": ("delta_m", "delta_o"),
    "grid": ("t_start", "t_end", "steps"),
    "quadrature": ("rule", "nodes", "seed"),
    "sweep": ("axis", "values"),
    "detect": ("threshold",),
    "trace": ("element", "source", "delta_a", "delta_b"),
    "output": ("directory", "emit_svg"),
}


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    model: CouplingModel
    system: SystemParams
    noise: StaticNoiseParams
    grid: TimeGrid
    quadrature: QuadratureSpec
    sweep_axis: str | None
    sweep_values: tuple[float, ...] | None
    threshold: float
    trace_element: tuple[int, int]
    trace_source: str
    trace_realization: Realization
    output_dir: str
    emit_svg: bool


def parse_config(text: str) -> RunConfig:
    """Parse and fully validate a configuration document."""
    raw: dict[str, dict[str, str]] = {"": {}}
    section = ""
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ParseError(line_no, "unterminated section header")
            section = stripped[1:-1].strip()
            if section not in _KEYS or section == "":
                raise ValidationError(section or "[]", "unknown section")
            raw.setdefault(section, {})
            continue
        if "=" not in stripped:
            raise ParseError(line_no, f"expected 'key = value', got {stripped!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _KEYS[section]:
            where = f"[{section}]" if section else "top level"
            raise ValidationError(key, f"unknown key in {where}")
        if key in raw.get(section, {}):
            raise ValidationError(key, "duplicate key")
        raw.setdefault(section, {})[key] = value
    return _build(raw)


def load_config(path) -> RunConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def _build(raw: dict[str, dict[str, str]]) -> RunConfig:
    top = raw.get("", {})
    if "subcommand" not in top:
        raise ValidationError("subcommand", "required key is missing")
    subcommand = top["subcommand"]
    if subcommand not in SUBCOMMANDS:
        raise ValidationError("subcommand", f"must be one of {SUBCOMMANDS}, got {subcommand!r}")

    allowed = _SECTIONS_BY_SUBCOMMAND[subcommand]
    for section in raw:
        if section and section not in allowed:
            raise ValidationError(
                f"[{section}]", f"section not valid for subcommand {subcommand!r}"
            )

    model_token = top.get("model", "ccm")
    try:
        model = CouplingModel(model_token)
    except ValueError:
        raise ValidationError("model", f"must be 'ccm' or 'dcm', got {model_token!r}") from None

    sys_raw = raw.get("system", {})
    system = _construct(
        "system",
        lambda: SystemParams(
            eps_a=_as_float("eps_a", sys_raw.get("eps_a", "1.0")),
            eps_b=_as_float("eps_b", sys_raw.get("eps_b", "1.0")),
            lam=_as_float("lambda", sys_raw.get("lambda", "0.5")),
            r=_as_float("r", sys_raw.get("r", "1.0")),
        ),
        offending="r" if "r" in sys_raw else "lambda",
    )

    noise_raw = raw.get("noise", {})
    noise = _construct(
        "noise",
        lambda: StaticNoiseParams(
            delta_m=_as_float("delta_m", noise_raw.get("delta_m", "1.0")),
            delta_o=_as_float("delta_o", noise_raw.get("delta_o", "1.0")),
        ),
        offending="delta_m",
    )

    grid_raw = raw.get("grid", {})
    grid = _construct(
        "grid",
        lambda: TimeGrid(
            t_start=_as_float("t_start", grid_raw.get("t_start", "0.0")),
            t_end=_as_float("t_end", grid_raw.get("t_end", "8.0")),
            steps=_as_int("steps", grid_raw.get("steps", "401")),
        ),
        offending="steps",
    )

    quad_raw = raw.get("quadrature", {})
    rule_token = quad_raw.get("rule", "gauss-legendre")
    try:
        rule = QuadratureRule(rule_token)
    except ValueError:
        raise ValidationError(
            "rule", f"must be one of {[r.value for r in QuadratureRule]}, got {rule_token!r}"
        ) from None
    quadrature = _construct(
        "quadrature",
        lambda: QuadratureSpec(
            rule=rule,
            nodes=_as_int("nodes", quad_raw.get("nodes", "129")),
            seed=_as_int("seed", quad_raw.get("seed", "0")),
        ),
        offending="nodes",
    )

    sweep_raw = raw.get("sweep", {})
    sweep_axis = None
    sweep_values = None
    if subcommand == "sweep":
        if "axis" not in sweep_raw:
            raise ValidationError("axis", "required for the sweep subcommand")
        sweep_axis = sweep_raw["axis"]
        if sweep_axis not in SWEEP_AXES:
            raise ValidationError("axis", f"must be one of {SWEEP_AXES}, got {sweep_axis!r}")
        if "values" not in sweep_raw:
            raise ValidationError("values", "required for the sweep subcommand")
        sweep_values = tuple(
            _as_float("values", item.strip()) for item in sweep_raw["values"].split(",")
        )
        if not sweep_values:
            raise ValidationError("values", "needs at least one value")

    detect_raw = raw.get("detect", {})
    threshold = _as_float("threshold", detect_raw.get("threshold", "1e-6"))
    if not threshold > 0.0:
        raise ValidationError("threshold", f"must be > 0, got {threshold}")

    trace_raw = raw.get("trace", {})
    element_text = trace_raw.get("element", "1, 4")
    parts = [p.strip() for p in element_text.split(",")]
    if len(parts) != 2:
        raise ValidationError("element", f"expected 'row, col', got {element_text!r}")
    trace_element = (_as_int("element", parts[0]), _as_int("element", parts[1]))
    if not all(1 <= v <= 4 for v in trace_element):
        raise ValidationError("element", f"indices must be in 1..4, got {trace_element}")
    trace_source = trace_raw.get("source", model.value)
    if trace_source not in TRACE_SOURCES:
        raise ValidationError("source", f"must be one of {TRACE_SOURCES}, got {trace_source!r}")
    trace_realization = Realization(
        delta_a=_as_float("delta_a", trace_raw.get("delta_a", "1.0")),
        delta_b=_as_float("delta_b", trace_raw.get("delta_b", "1.0")),
    )

    out_raw = raw.get("output", {})
    output_dir = out_raw.get("directory", "out")
    emit_svg = _as_bool("emit_svg", out_raw.get("emit_svg", "true"))

    return RunConfig(
        subcommand=subcommand,
        model=model,
        system=system,
        noise=noise,
        grid=grid,
        quadrature=quadrature,
        sweep_axis=sweep_axis,
        sweep_values=sweep_values,
        threshold=threshold,
        trace_element=trace_element,
        trace_source=trace_source,
        trace_realization=trace_realization,
        output_dir=output_dir,
        emit_svg=emit_svg,
    )


def dumps_config(cfg: RunConfig) -> str:
    """Effective configuration in the same format parse_config accepts."""
    lines = [f"subcommand = {cfg.subcommand}", f"model = {cfg.model.value}", ""]
    lines += [
        "[system]",
        f"eps_a = {cfg.system.eps_a!r}",
        f"eps_b = {cfg.system.eps_b!r}",
        f"lambda = {cfg.system.lam!r}",
        f"r = {cfg.system.r!r}",
        "",
        "[noise]",
        f"delta_m = {cfg.noise.delta_m!r}",
        f"delta_o = {cfg.noise.delta_o!r}",
        "",
        "[grid]",
        f"t_start = {cfg.grid.t_start!r}",
        f"t_end = {cfg.grid.t_end!r}",
        f"steps = {cfg.grid.steps}",
        "",
        "[quadrature]",
        f"rule = {cfg.quadrature.rule.value}",
        f"nodes = {cfg.quadrature.nodes}",
        f"seed = {cfg.quadrature.seed}",
    ]
    if cfg.subcommand == "sweep":
        lines += [
            "",
            "[sweep]",
            f"axis = {cfg.sweep_axis}",
            "values = " + ", ".join(repr(v) for v in cfg.sweep_values),
        ]
    if cfg.subcommand == "detect":
        lines += ["", "[detect]", f"threshold = {cfg.threshold!r}"]
    if cfg.subcommand == "trace":
        lines += [
            "",
            "[trace]",
            f"element = {cfg.trace_element[0]}, {cfg.trace_element[1]}",
            f"source = {cfg.trace_source}",
            f"delta_a = {cfg.trace_realization.delta_a!r}",
            f"delta_b = {cfg.trace_realization.delta_b!r}",
        ]
    lines += [
        "",
        "[output]",
        f"directory = {cfg.output_dir}",
        f"emit_svg = {'true' if cfg.emit_svg else 'false'}",
        "",
    ]
    return "\n".join(lines)


def _as_float(key: str, text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ValidationError(key, f"not a number: {text!r}") from None


def _as_int(key: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValidationError(key, f"not an integer: {text!r}") from None


def _as_bool(key: str, text: str) -> bool:
    if text == "true":
        return True
    if text == "false":
        return False
    raise ValidationError(key, f"expected 'true' or 'false', got {text!r}")


def _construct(section: str, factory, offending: str):
    """Run a dataclass constructor, renaming its DomainError to the config key.

    The domain errors raised by the parameter dataclasses start with the
    offending field name, which maps directly onto a config key; ``offending``
    is only the fallback when that heuristic finds nothing.
    """
    from .errors import DomainError, QuadratureError

    try:
        return factory()
    except (DomainError, QuadratureError) as exc:
        token = str(exc).split()[0] if str(exc) else ""
        key = {"lam": "lambda"}.get(token, token)
        if key not in _KEYS.get(section, ()):
            key = offending
        raise ValidationError(key, str(exc)) from None
