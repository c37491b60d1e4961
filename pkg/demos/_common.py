"""Shared plumbing for the demo scripts."""

from pathlib import Path


def output_dir() -> Path:
    out = Path(__file__).resolve().parent / "output"
    out.mkdir(exist_ok=True)
    return out
