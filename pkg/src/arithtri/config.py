"""Runtime limits shared by the enumeration-heavy modules."""

import os
from dataclasses import dataclass, field

ENUM_CAP_ENV = "ARITHTRI_ENUM_CAP"
DEFAULT_ENUM_CAP = 26


class EnumerationCapError(RuntimeError):
    """Raised when an exhaustive 2**n enumeration is requested above the cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            f"refusing to enumerate 2**{n} words: n exceeds the enumeration cap {cap} "
            f"(raise it with cap=... or the {ENUM_CAP_ENV} environment variable)"
        )


def _env_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None or raw == "":
        return DEFAULT_ENUM_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{ENUM_CAP_ENV} must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class Limits:
    enum_cap: int = field(default_factory=_env_cap)
    # full-triangle materialization only; row-at-a-time functions are uncapped
    triangle_cap: int = 64
    # largest nonlinear row the CLI will print
    cli_nonlinear_max: int = 1000


def check_enum_cap(n: int, cap: int | None = None) -> None:
    if cap is None:
        cap = Limits().enum_cap
    if n > cap:
        raise EnumerationCapError(n, cap)
