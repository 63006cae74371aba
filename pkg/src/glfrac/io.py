"""File formats: signal and table CSV, model and config JSON."""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .errors import ConfigError, DomainError
from .fode import FodeModel
from .signals import SampledSignal


def fmt(x: float) -> str:
    """17 significant digits, enough to round-trip any binary64 value."""
    return format(float(x), ".17g")


def write_csv(path, header: list[str], rows) -> None:
    text = csv_text(header, rows)
    with open(path, "w", newline="") as fh:
        fh.write(text)


def csv_text(header: list[str], rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(v if isinstance(v, str) else fmt(v) for v in row) + "\n")
    return buf.getvalue()


def write_signal(path, sig: SampledSignal) -> None:
    write_csv(path, ["time", "value"], zip(sig.times, sig.values))


def read_signal(path) -> SampledSignal:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or [c.strip() for c in rows[0]] != ["time", "value"]:
        raise DomainError(f"{path}: expected header 'time,value'")
    try:
        data = np.array([[float(a), float(b)] for a, b in rows[1:]], dtype=np.float64)
    except ValueError as exc:
        raise DomainError(f"{path}: {exc}") from None
    if data.shape[0] < 2:
        raise DomainError(f"{path}: need at least two samples to infer the step")
    t = data[:, 0]
    h = t[1] - t[0]
    k = np.arange(t.size)
    if t[0] != 0.0 or not h > 0 or np.max(np.abs(t - k * h)) > 1e-9 * max(1.0, t[-1]):
        raise DomainError(f"{path}: times must be uniform and start at 0")
    return SampledSignal(float(h), data[:, 1])


def _field_error(field: str, msg: str) -> ConfigError:
    return ConfigError(f"field '{field}': {msg}")


def model_from_doc(doc, field: str = "model") -> FodeModel:
    if not isinstance(doc, dict) or "terms" not in doc:
        raise _field_error(field, "expected an object with a 'terms' list")
    terms = doc["terms"]
    if not isinstance(terms, list) or not terms:
        raise _field_error(f"{field}.terms", "must be a non-empty list")
    parsed = []
    for i, t in enumerate(terms):
        if not isinstance(t, dict) or set(t) != {"coeff", "order"}:
            raise _field_error(f"{field}.terms[{i}]", "expected {\"coeff\": .., \"order\": ..}")
        try:
            parsed.append((float(t["coeff"]), float(t["order"])))
        except (TypeError, ValueError):
            raise _field_error(f"{field}.terms[{i}]", "coeff and order must be numbers") from None
    try:
        return FodeModel(parsed)
    except DomainError as exc:
        raise _field_error(field, str(exc)) from None


def load_json(path) -> object:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def read_model(path) -> FodeModel:
    return model_from_doc(load_json(path))


def write_model(path, model: FodeModel) -> None:
    with open(path, "w") as fh:
        json.dump(model.to_dict(), fh, indent=2)
        fh.write("\n")


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"
