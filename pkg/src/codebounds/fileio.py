"""Bit-stable text formats for code objects and JSON emission for reports.

Spherical code file:  line 1 is ``sphere <d>``, then one vector per line as
d whitespace-separated scalar tokens.  Q-ary code file: line 1 is
``qary <q> <r>``, then one codeword per line as r integers in [0, q).
Blank lines and ``#`` comment lines are ignored on input, which lets writers
append run manifests without breaking round-trips.
"""

import hashlib
import json

from .codes import QaryCode, UnitVectorSet
from .errors import FileFormatError
from .scalars import format_scalar, parse_scalar


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_spherical(text: str, exact: bool = True) -> UnitVectorSet:
    lines = list(_content_lines(text))
    if not lines:
        raise FileFormatError("empty file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "sphere":
        raise FileFormatError(f"line {lineno}: expected 'sphere <d>', got {header!r}")
    try:
        d = int(parts[1])
    except ValueError:
        raise FileFormatError(f"line {lineno}: bad dimension {parts[1]!r}") from None
    if d < 1:
        raise FileFormatError(f"line {lineno}: dimension must be >= 1")
    vectors = []
    for lineno, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != d:
            raise FileFormatError(f"line {lineno}: expected {d} coordinates, got {len(tokens)}")
        try:
            vectors.append(tuple(parse_scalar(t, exact=exact) for t in tokens))
        except ValueError as exc:
            raise FileFormatError(f"line {lineno}: {exc}") from None
    if not vectors:
        raise FileFormatError("no vectors in file")
    return UnitVectorSet(d, tuple(vectors))


def serialize_spherical(vset: UnitVectorSet) -> str:
    out = [f"sphere {vset.dimension}"]
    for v in vset.vectors:
        out.append(" ".join(format_scalar(x) for x in v))
    return "\n".join(out) + "\n"


def parse_qary(text: str) -> QaryCode:
    lines = list(_content_lines(text))
    if not lines:
        raise FileFormatError("empty file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "qary":
        raise FileFormatError(f"line {lineno}: expected 'qary <q> <r>', got {header!r}")
    try:
        q, r = int(parts[1]), int(parts[2])
    except ValueError:
        raise FileFormatError(f"line {lineno}: bad parameters {header!r}") from None
    words = []
    for lineno, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != r:
            raise FileFormatError(f"line {lineno}: expected {r} symbols, got {len(tokens)}")
        try:
            word = tuple(int(t) for t in tokens)
        except ValueError:
            raise FileFormatError(f"line {lineno}: non-integer symbol") from None
        for s in word:
            if not 0 <= s < q:
                raise FileFormatError(f"line {lineno}: symbol {s} outside [0, {q})")
        words.append(word)
    if not words:
        raise FileFormatError("no codewords in file")
    try:
        return QaryCode(q, r, tuple(words))
    except Exception as exc:
        raise FileFormatError(str(exc)) from None


def serialize_qary(code: QaryCode) -> str:
    out = [f"qary {code.q} {code.r}"]
    for w in code.words:
        out.append(" ".join(str(s) for s in w))
    return "\n".join(out) + "\n"


def certificate_json(cert) -> str:
    return json.dumps(cert.to_dict(), indent=2, sort_keys=False)


def report_json(report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=False)


def sha256_hex(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()
