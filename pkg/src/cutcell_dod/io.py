"""Snapshot CSV and report JSON files.

Snapshot schema: header ``x_left,x_right,u``, one row per cell, 17
significant digits, LF line endings.  Reading a snapshot and writing it back
reproduces the file byte for byte.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

HEADER = "x_left,x_right,u"


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def format_snapshot(x_left, x_right, u) -> str:
    lines = [HEADER]
    for a, b, v in zip(x_left, x_right, u):
        lines.append(f"{_fmt(a)},{_fmt(b)},{_fmt(v)}")
    return "\n".join(lines) + "\n"


def write_snapshot(path, mesh, state) -> None:
    text = format_snapshot(mesh.x_left, mesh.x_right, state.values)
    Path(path).write_text(text, newline="\n")


def read_snapshot(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    with open(path, newline="") as f:
        header = f.readline().rstrip("\n")
        if header != HEADER:
            raise ValueError(f"unexpected snapshot header {header!r}")
        data = np.loadtxt(f, delimiter=",", ndmin=2)
    return data[:, 0], data[:, 1], data[:, 2]


def write_json(path, payload: dict) -> None:
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", newline="\n")
