"""Channel text files ("combichannel v1"), label files and certificate JSON."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .channel import Certificate, Channel, ChannelError, WeightVec

HEADER = "combichannel v1"


class ChannelFormatError(ChannelError):
    pass


def save_channel(A: Channel, path, labels: bool = True) -> None:
    """Write A; labels (when present) go to ``<path>.inputs`` / ``<path>.outputs``."""
    path = Path(path)
    lines = [HEADER, f"{A.num_inputs} {A.num_outputs} {A.num_edges}"]
    lines += [f"{x} {y}" for x, y in A.edges()]
    path.write_text("\n".join(lines) + "\n")
    if labels:
        for suffix, lab in ((".inputs", A.input_labels), (".outputs", A.output_labels)):
            if lab is not None:
                Path(str(path) + suffix).write_text("\n".join(lab) + "\n")


def _read_labels(path: Path, size: int):
    if not path.exists():
        return None
    labels = path.read_text().splitlines()
    if len(labels) != size:
        raise ChannelFormatError(f"{path}: {len(labels)} labels, expected {size}")
    return labels


def load_channel(path) -> Channel:
    path = Path(path)
    lines = [ln.strip() for ln in path.read_text().splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise ChannelFormatError(f"{path}: missing {HEADER!r} header")
    try:
        nx, ny, ne = (int(t) for t in lines[1].split())
    except (IndexError, ValueError):
        raise ChannelFormatError(f"{path}: bad size line") from None
    body = lines[2:]
    if len(body) != ne:
        raise ChannelFormatError(f"{path}: header announces {ne} edges, found {len(body)}")
    edges = []
    seen = set()
    for k, ln in enumerate(body, start=3):
        try:
            x, y = (int(t) for t in ln.split())
        except ValueError:
            raise ChannelFormatError(f"{path}:{k}: expected 'x y', got {ln!r}") from None
        if (x, y) in seen:
            raise ChannelFormatError(f"{path}:{k}: duplicate edge ({x}, {y})")
        if edges and (x, y) < edges[-1]:
            raise ChannelFormatError(f"{path}:{k}: edges not in ascending order")
        seen.add((x, y))
        edges.append((x, y))
    return Channel.from_edges(
        nx,
        ny,
        edges,
        _read_labels(Path(str(path) + ".inputs"), nx),
        _read_labels(Path(str(path) + ".outputs"), ny),
    )


def _pair(v) -> list[int]:
    v = Fraction(v)
    return [v.numerator, v.denominator]


def _unpair(p) -> Fraction:
    if isinstance(p, (list, tuple)) and len(p) == 2:
        return Fraction(int(p[0]), int(p[1]))
    if isinstance(p, (int, str)):
        return Fraction(p)
    raise ValueError(f"cannot read rational from {p!r}")


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "kind": cert.kind,
        "side": cert.vector.side,
        "values": [_pair(v) for v in cert.vector],
        "value": _pair(cert.value),
    }


def certificate_from_json(obj: dict) -> Certificate:
    vec = WeightVec(obj["side"], [_unpair(v) for v in obj["values"]])
    return Certificate(obj["kind"], vec, _unpair(obj["value"]))


def save_certificate(cert: Certificate, path) -> None:
    Path(path).write_text(json.dumps(certificate_to_json(cert)) + "\n")


def load_certificate(path) -> Certificate:
    return certificate_from_json(json.loads(Path(path).read_text()))


def read_weights(path, side: str) -> WeightVec:
    """One rational per line ("3", "1/2"); blank lines and '#' comments ignored."""
    vals = []
    for ln in Path(path).read_text().splitlines():
        ln = ln.split("#", 1)[0].strip()
        if ln:
            vals.append(Fraction(ln))
    return WeightVec(side, vals)
