"""Plain-text key=value configuration files, overridable by CLI flags."""

from __future__ import annotations


def load_config(path: str) -> dict[str, str]:
    """Parse ``key = value`` lines; '#' comments and blanks ignored."""
    out: dict[str, str] = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out
