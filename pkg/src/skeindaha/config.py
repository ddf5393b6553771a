"""Runtime configuration.

A single switch controls the optional full-GCD reduction post-pass in the
fraction arithmetic.  It is read from the environment once at import and
can be toggled programmatically (the CLI re-reads the environment).
"""

import os

_gcd_enabled = os.environ.get("SKEINDAHA_GCD", "0") not in ("0", "", "false")


def gcd_enabled() -> bool:
    return _gcd_enabled


def set_gcd_enabled(value: bool) -> None:
    global _gcd_enabled
    _gcd_enabled = bool(value)


def reload_from_env() -> None:
    set_gcd_enabled(os.environ.get("SKEINDAHA_GCD", "0") not in ("0", "", "false"))
