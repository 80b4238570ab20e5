"""Text format for certificates.

    # comment
    name c4-two-primes
    ring 2 4 0
    target:
    gbei c4.graph            (or one polynomial per line)
    witness:
    f[1,2] + f[3,4]
    ...
    claims:
    f f[1,2] ^ 2
"""

from __future__ import annotations

from pathlib import Path

from ..bei.ideals import minors_on
from ..field_poly import Ideal, PolynomialSyntaxError, RingSpec, format_polynomial, parse_polynomial
from ..graph import read_graph
from .core import Certificate

SECTIONS = ("target", "witness", "claims")


class CertificateFormatError(ValueError):
    pass


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_certificate(text: str, base_dir: str | Path = ".") -> Certificate:
    name = "certificate"
    ring: RingSpec | None = None
    section: str | None = None
    body: dict[str, list[tuple[int, str]]] = {s: [] for s in SECTIONS}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        head = line.rstrip(":").strip()
        if line.endswith(":") and head in SECTIONS:
            section = head
            continue
        if section is None:
            word, _, rest = line.partition(" ")
            if word == "name":
                name = rest.strip() or name
            elif word == "ring":
                ring = _parse_ring(rest, lineno)
            else:
                raise CertificateFormatError(f"line {lineno}: expected 'name', 'ring' or a section header")
            continue
        body[section].append((lineno, line))
    if ring is None:
        raise CertificateFormatError("missing 'ring m n char' header")
    if not body["witness"]:
        raise CertificateFormatError("empty witness section")

    graph = None
    target_lines = body["target"]
    if len(target_lines) == 1 and target_lines[0][1].startswith("gbei "):
        lineno, line = target_lines[0]
        path = Path(base_dir) / line[5:].strip()
        try:
            graph = read_graph(path)
        except OSError as exc:
            raise CertificateFormatError(f"line {lineno}: cannot read graph file {path}: {exc}") from exc
        if graph.n != ring.n or ring.m != 2:
            raise CertificateFormatError(f"line {lineno}: graph has {graph.n} vertices but ring is {ring.m} x {ring.n}")
        target = Ideal(ring, minors_on(ring, graph.edges))
    else:
        target = Ideal(ring, [_poly(line, ring, lineno) for lineno, line in target_lines])

    witness = tuple(_poly(line, ring, lineno) for lineno, line in body["witness"])
    claims = tuple(_claim(line, ring, lineno) for lineno, line in body["claims"])
    return Certificate(name, ring, target, witness, claims, "file", graph)


def _parse_ring(rest: str, lineno: int) -> RingSpec:
    parts = rest.split()
    try:
        m, n, char = (int(p) for p in parts)
        return RingSpec(m, n, char)
    except ValueError as exc:
        raise CertificateFormatError(f"line {lineno}: bad ring header {rest!r}: {exc}") from exc


def _poly(text: str, ring: RingSpec, lineno: int):
    try:
        return parse_polynomial(text, ring)
    except PolynomialSyntaxError as exc:
        raise CertificateFormatError(f"line {lineno}: {exc}") from exc


def _claim(line: str, ring: RingSpec, lineno: int):
    if not line.startswith("f "):
        raise CertificateFormatError(f"line {lineno}: claims look like 'f <polynomial> ^ k'")
    poly, sep, k = line[2:].rpartition("^")
    if not sep or not k.strip().isdigit() or int(k) < 1:
        raise CertificateFormatError(f"line {lineno}: claim needs a positive exponent after the last '^'")
    return _poly(poly, ring, lineno), int(k)


def read_certificate(path: str | Path) -> Certificate:
    path = Path(path)
    return parse_certificate(path.read_text(encoding="utf-8"), path.parent)


def format_certificate(cert: Certificate) -> str:
    """Self-contained text: the target is written out as polynomials."""
    r = cert.ring
    lines = [f"name {cert.name}", f"ring {r.m} {r.n} {r.characteristic}", "target:"]
    lines += [format_polynomial(g) for g in cert.target.generators]
    lines.append("witness:")
    lines += [format_polynomial(w) for w in cert.witness]
    lines.append("claims:")
    lines += [f"f {format_polynomial(f)} ^ {k}" for f, k in cert.claims]
    return "\n".join(lines) + "\n"


def write_certificate(cert: Certificate, path: str | Path) -> None:
    Path(path).write_text(format_certificate(cert), encoding="utf-8")
