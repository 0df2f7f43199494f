"""Instance files: a generator plus an ordinal-sum conorm, as JSON with rational text."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Union

from .conorm import ConstructionError, OrdinalSumConorm, Summand, kind
from .generator import AffinePiece, GeneratorError, PiecewiseMonotone
from .genop import GeneratedOp
from .numeric import RangeViolation, parse_fraction, parse_rational
from .rangeset import StructureError, interval

FIXTURES = (
    "example_3_1",
    "example_4_2_1",
    "example_4_2_2",
    "def_4_1_ex1",
    "def_4_1_ex3",
    "no_instance",
    "non_idempotent",
)


class SpecError(ValueError):
    """A malformed or invalid instance file; ``pointer`` locates the problem."""

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
        self.message = message


@dataclass(frozen=True)
class InstanceSpec:
    generator: PiecewiseMonotone
    conorm: OrdinalSumConorm
    metadata: dict = field(default_factory=dict, compare=False)

    def op(self) -> GeneratedOp:
        return GeneratedOp(self.generator, self.conorm)

    @property
    def name(self) -> str:
        return str(self.metadata.get("name", ""))


def _get(obj, key, pointer, expected=str):
    if not isinstance(obj, dict) or key not in obj:
        raise SpecError(pointer, f"missing field {key!r}")
    val = obj[key]
    if not isinstance(val, expected):
        names = expected.__name__ if isinstance(expected, type) else "/".join(
            t.__name__ for t in expected
        )
        raise SpecError(f"{pointer}/{key}", f"expected {names}, got {type(val).__name__}")
    return val


def _rational(text, pointer, signed=False, unit=True):
    if not isinstance(text, str):
        raise SpecError(pointer, f"rationals are written as text, got {type(text).__name__}")
    try:
        return parse_rational(text) if unit else parse_fraction(text, signed=signed)
    except (ValueError, RangeViolation) as exc:
        raise SpecError(pointer, str(exc)) from None


def _parse_generator(raw, pointer) -> PiecewiseMonotone:
    if not isinstance(raw, dict):
        raise SpecError(pointer, "expected an object")
    pieces = []
    for i, p in enumerate(_get(raw, "pieces", pointer, list)):
        at = f"{pointer}/pieces/{i}"
        if not isinstance(p, dict):
            raise SpecError(at, "expected an object")
        lo = _rational(_get(p, "lo", at), f"{at}/lo")
        hi = _rational(_get(p, "hi", at), f"{at}/hi")
        lo_closed = p.get("lo_closed", True)
        hi_closed = p.get("hi_closed", True)
        for key, val in (("lo_closed", lo_closed), ("hi_closed", hi_closed)):
            if not isinstance(val, bool):
                raise SpecError(f"{at}/{key}", "expected a boolean")
        dom = interval(lo, hi, lo_closed, hi_closed)
        if dom is None:
            raise SpecError(at, "empty domain")
        slope = _rational(_get(p, "slope", at), f"{at}/slope", signed=True, unit=False)
        intercept = _rational(
            _get(p, "intercept", at), f"{at}/intercept", signed=True, unit=False
        )
        try:
            pieces.append(AffinePiece(dom, slope, intercept))
        except GeneratorError as exc:
            raise SpecError(at, str(exc)) from None
    overrides = {}
    raw_over = raw.get("overrides", {})
    if not isinstance(raw_over, dict):
        raise SpecError(f"{pointer}/overrides", "expected an object")
    for k, v in raw_over.items():
        at = f"{pointer}/overrides/{k.replace('~', '~0').replace('/', '~1')}"
        overrides[_rational(k, at)] = _rational(v, at)
    try:
        return PiecewiseMonotone(pieces, overrides)
    except (GeneratorError, StructureError) as exc:
        raise SpecError(pointer, str(exc)) from None


def _parse_conorm(raw, pointer) -> OrdinalSumConorm:
    if not isinstance(raw, dict):
        raise SpecError(pointer, "expected an object")
    summands = []
    for i, s in enumerate(_get(raw, "summands", pointer, list)):
        at = f"{pointer}/summands/{i}"
        lo = _rational(_get(s, "lo", at), f"{at}/lo")
        hi = _rational(_get(s, "hi", at), f"{at}/hi")
        try:
            summands.append(Summand(lo, hi, kind(_get(s, "kind", at))))
        except ConstructionError as exc:
            raise SpecError(at, str(exc)) from None
    try:
        return OrdinalSumConorm(summands)
    except ConstructionError as exc:
        raise SpecError(pointer, str(exc)) from None


def spec_from_dict(data) -> InstanceSpec:
    if not isinstance(data, dict):
        raise SpecError("", "expected a JSON object")
    meta = data.get("metadata", {})
    if not isinstance(meta, dict):
        raise SpecError("/metadata", "expected an object")
    gen = _parse_generator(_get(data, "generator", "", dict), "/generator")
    con = _parse_conorm(_get(data, "conorm", "", dict), "/conorm")
    return InstanceSpec(gen, con, dict(meta))


def parse_spec(source: Union[str, Path]) -> InstanceSpec:
    """Parse an instance from a path or from JSON text."""
    if isinstance(source, Path) or not source.lstrip().startswith("{"):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise SpecError("", f"cannot read {source}: {exc.strerror}") from None
    else:
        text = source
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError("", f"invalid JSON at line {exc.lineno} column {exc.colno}") from None
    return spec_from_dict(data)


def spec_to_dict(spec: InstanceSpec) -> dict:
    return {
        "metadata": dict(spec.metadata),
        "generator": spec.generator.to_json(),
        "conorm": spec.conorm.to_json(),
    }


def serialize(spec: InstanceSpec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2, ensure_ascii=False) + "\n"


def fixture_path(name: str):
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}")
    return resources.files("genconorm") / "fixtures" / f"{name}.json"


def load_fixture(name: str) -> InstanceSpec:
    return parse_spec(fixture_path(name).read_text(encoding="utf-8"))
