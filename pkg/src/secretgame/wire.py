"""Decimal-string integer encoding shared by the service, lab, and CLI.

Adaptive follow-up questions exceed 64 bits, and common JSON clients
silently corrupt large numerics, so every integer crossing the wire is a
decimal string. Booleans stay booleans.
"""

from __future__ import annotations

from .core import GameError


class ValidationError(GameError):
    error_code = "ValidationError"


def encode_int(value: int) -> str:
    return str(value)


def encode_vector(values) -> list[str]:
    return [str(v) for v in values]


def decode_int(value, field: str, minimum: int | None = None) -> int:
    """Parse one wire integer: a decimal string, or a plain JSON int."""
    if isinstance(value, bool):
        raise ValidationError(f"{field} must be an integer, got a boolean")
    if isinstance(value, int):
        parsed = value
    elif isinstance(value, str):
        text = value.strip()
        if not text.lstrip("-").isdigit():
            raise ValidationError(f"{field} is not a decimal integer: {value!r}")
        parsed = int(text)
    else:
        raise ValidationError(f"{field} must be an integer or decimal string, got {type(value).__name__}")
    if minimum is not None and parsed < minimum:
        raise ValidationError(f"{field} must be >= {minimum}, got {parsed}")
    return parsed


def decode_vector(value, field: str) -> tuple[int, ...]:
    if not isinstance(value, (list, tuple)):
        raise ValidationError(f"{field} must be a list of integers")
    return tuple(decode_int(v, f"{field}[{i}]") for i, v in enumerate(value))
