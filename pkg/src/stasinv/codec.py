"""4-to-3 block codec and sliding-window integrity checking for sample streams.

Disjoint groups of four unit-spaced weighted samples satisfy
g0 + g1 = a*(g2 + g3), so the final slot of each group is implied by the
other three and the invariant: a stream of N samples stores only
N - floor(N/4) explicit values.  The same identity, swept over overlapping
windows, yields a deterministic integrity check with single-error
localization.

Text formats:

  SIG1 (sample series)          STASC1 (encoded stream)
  ----------------------        ------------------------------
  SIG1                          STASC1
  t0=<dec> kind=<f|s> count=<N> a=<re>,<im> t0=<dec> count=<N>
  <re>,<im>         (N lines)   re,im;re,im;re,im  (N//4 lines)
                                rem=<k>
                                <re>,<im>          (k lines)

Decimals use '.' and up to 17 significant digits (binary64 round-trip
exact); lines end with LF.  kind=s series are converted to weighted f-values
on load.  A non-unit grid step may be recorded with an optional trailing
`step=<dec>` token on the SIG1 header line; it is omitted when step is 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SampleSeries
from .errors import (
    DegenerateParameter,
    DomainError,
    FormatError,
    IdentityViolation,
    NoValidWindows,
)
from .reconstruct import predict_next

__all__ = [
    "EncodedStream",
    "IntegrityFinding",
    "encode_stream",
    "decode_stream",
    "detect_errors",
    "fmt_float",
    "fmt_complex",
    "parse_complex",
    "dump_sig1",
    "load_sig1",
    "dump_stasc1",
    "load_stasc1",
]

ENCODE_TOL = 1e-6
_SCALE_FLOOR = 1e-300


@dataclass(frozen=True)
class EncodedStream:
    """Header (invariant, grid) plus 4->3 compressed blocks and verbatim tail."""

    a: complex
    t0: float
    count: int
    blocks: tuple[tuple[complex, complex, complex], ...]
    remainder: tuple[complex, ...]

    def __post_init__(self):
        if self.a == 0:
            raise FormatError("encoded stream requires a != 0")
        if not 0 <= len(self.remainder) <= 3:
            raise FormatError(f"remainder must hold 0..3 samples, got {len(self.remainder)}")
        if self.count != 4 * len(self.blocks) + len(self.remainder):
            raise FormatError(
                f"count {self.count} inconsistent with {len(self.blocks)} blocks "
                f"+ {len(self.remainder)} remainder samples")


@dataclass(frozen=True)
class IntegrityFinding:
    """Per-window verdict from the sliding-window check."""

    window_index: int
    residual: float
    implicated_samples: tuple[int, ...]
    verdict: str  # "flagged" | "clean"


def _window_scale(g, i: int) -> float:
    return max(abs(g[i + j]) for j in range(4))


def encode_stream(series: SampleSeries, a: complex) -> EncodedStream:
    """Compress disjoint 4-blocks to their first three slots.

    Every full block is verified against the identity (relative residual
    <= 1e-6) before its final slot is dropped; a failing block raises
    IdentityViolation rather than encoding lossy data silently.  Samples
    past the last full block are stored verbatim.
    """
    if a == 0:
        raise DegenerateParameter("a = 0 cannot encode (slot 3 would be unrecoverable)")
    if series.step != 1.0:
        raise DomainError("encoding requires a unit-spaced series")
    g = series.values
    n_blocks = len(g) // 4
    blocks = []
    for b in range(n_blocks):
        i = 4 * b
        scale = max(_window_scale(g, i), _SCALE_FLOOR)
        residual = abs(g[i] + g[i + 1] - a * (g[i + 2] + g[i + 3])) / scale
        if residual > ENCODE_TOL:
            raise IdentityViolation(b, residual)
        blocks.append((g[i], g[i + 1], g[i + 2]))
    remainder = tuple(g[4 * n_blocks:])
    return EncodedStream(a=a, t0=series.t0, count=len(g),
                         blocks=tuple(blocks), remainder=remainder)


def decode_stream(enc: EncodedStream) -> SampleSeries:
    """Reconstruct the full series: slot 3 of each block is (g0+g1)/a - g2."""
    values = []
    for g0, g1, g2 in enc.blocks:
        values.extend((g0, g1, g2, predict_next(g0, g1, g2, enc.a)))
    values.extend(enc.remainder)
    return SampleSeries(enc.t0, tuple(values), kind="f")


def detect_errors(series: SampleSeries, a: complex, tol: float) -> list[IntegrityFinding]:
    """Sweep all windows; flag residuals above tol and localize single errors.

    residual_i = |g_i + g_{i+1} - a*(g_{i+2} + g_{i+3})| normalized by the
    window's max slot magnitude.  Localization matches flag patterns: a
    single corrupted sample j perturbs exactly the valid windows covering j,
    so sample j is implicated when its covering-window set equals the
    maximal run of consecutive flagged windows around it.  Corruptions at
    least 7 samples apart produce disjoint runs and localize independently;
    closer ones merge their runs and are reported window-level only.  Each
    flagged window reports the implicated samples it covers.
    """
    if series.step != 1.0:
        raise DomainError("integrity checking requires a unit-spaced series")
    g = series.values
    n = len(g)
    if n < 4:
        raise NoValidWindows(f"need at least 4 samples, got {n}")
    n_windows = n - 3
    residuals = []
    for i in range(n_windows):
        scale = max(_window_scale(g, i), _SCALE_FLOOR)
        residuals.append(abs(g[i] + g[i + 1] - a * (g[i + 2] + g[i + 3])) / scale)
    flagged = {i for i, r in enumerate(residuals) if r > tol}

    def covering(j: int) -> set[int]:
        return set(range(max(0, j - 3), min(j, n_windows - 1) + 1))

    runs = []
    for i in sorted(flagged):
        if runs and i == max(runs[-1]) + 1:
            runs[-1].add(i)
        else:
            runs.append({i})
    implicated = {j for j in range(n) for run in runs if covering(j) == run}
    findings = []
    for i in range(n_windows):
        if i in flagged:
            hits = tuple(j for j in range(i, i + 4) if j in implicated)
            findings.append(IntegrityFinding(i, residuals[i], hits, "flagged"))
        else:
            findings.append(IntegrityFinding(i, residuals[i], (), "clean"))
    return findings


# -- text serialization -------------------------------------------------------

def fmt_float(x: float) -> str:
    """Up to 17 significant digits; parses back to the identical binary64."""
    return f"{x:.17g}"


def fmt_complex(z: complex) -> str:
    return f"{fmt_float(z.real)},{fmt_float(z.imag)}"


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise FormatError(f"expected 're,im', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise FormatError(f"bad complex literal {text!r}") from exc


def _parse_fields(line: str, expected: tuple[str, ...],
                  optional: tuple[str, ...] = ()) -> dict[str, str]:
    fields = {}
    for token in line.split():
        key, sep, value = token.partition("=")
        if not sep or key in fields:
            raise FormatError(f"bad header token {token!r}")
        fields[key] = value
    missing = [k for k in expected if k not in fields]
    extra = [k for k in fields if k not in expected + optional]
    if missing or extra:
        raise FormatError(f"header fields: missing {missing}, unexpected {extra}")
    return fields


def dump_sig1(series: SampleSeries) -> str:
    """Serialize a series as SIG1 text (canonical f-values, kind=f)."""
    header = f"t0={fmt_float(series.t0)} kind=f count={len(series)}"
    if series.step != 1.0:
        header += f" step={fmt_float(series.step)}"
    lines = ["SIG1", header]
    lines.extend(fmt_complex(v) for v in series.values)
    return "\n".join(lines) + "\n"


def load_sig1(text: str) -> SampleSeries:
    lines = text.splitlines()
    if not lines or lines[0] != "SIG1":
        raise FormatError("missing SIG1 magic line")
    if len(lines) < 2:
        raise FormatError("missing SIG1 header line")
    fields = _parse_fields(lines[1], ("t0", "kind", "count"), optional=("step",))
    try:
        t0 = float(fields["t0"])
        count = int(fields["count"])
        step = float(fields.get("step", "1"))
    except ValueError as exc:
        raise FormatError(f"bad SIG1 header: {lines[1]!r}") from exc
    kind = fields["kind"]
    if kind not in ("f", "s"):
        raise FormatError(f"kind must be 'f' or 's', got {kind!r}")
    if count < 0:
        raise FormatError("count must be non-negative")
    body = [line for line in lines[2:] if line.strip()]
    if len(body) != count:
        raise FormatError(f"expected {count} sample lines, found {len(body)}")
    values = tuple(parse_complex(line.strip()) for line in body)
    if kind == "s":
        return SampleSeries.from_s(t0, values, step=step)
    return SampleSeries.from_f(t0, values, step=step)


def dump_stasc1(enc: EncodedStream) -> str:
    lines = ["STASC1",
             f"a={fmt_complex(enc.a)} t0={fmt_float(enc.t0)} count={enc.count}"]
    lines.extend(";".join(fmt_complex(v) for v in block) for block in enc.blocks)
    lines.append(f"rem={len(enc.remainder)}")
    lines.extend(fmt_complex(v) for v in enc.remainder)
    return "\n".join(lines) + "\n"


def load_stasc1(text: str) -> EncodedStream:
    lines = text.splitlines()
    if not lines or lines[0] != "STASC1":
        raise FormatError("missing STASC1 magic line")
    if len(lines) < 2:
        raise FormatError("missing STASC1 header line")
    fields = _parse_fields(lines[1], ("a", "t0", "count"))
    a = parse_complex(fields["a"])
    try:
        t0 = float(fields["t0"])
        count = int(fields["count"])
    except ValueError as exc:
        raise FormatError(f"bad STASC1 header: {lines[1]!r}") from exc
    if count < 0:
        raise FormatError("count must be non-negative")
    n_blocks = count // 4
    pos = 2
    blocks = []
    for _ in range(n_blocks):
        if pos >= len(lines):
            raise FormatError("truncated STASC1 block section")
        parts = lines[pos].split(";")
        if len(parts) != 3:
            raise FormatError(f"block line needs 3 samples, got {lines[pos]!r}")
        blocks.append(tuple(parse_complex(p) for p in parts))
        pos += 1
    if pos >= len(lines) or not lines[pos].startswith("rem="):
        raise FormatError("missing rem= line")
    try:
        k = int(lines[pos][4:])
    except ValueError as exc:
        raise FormatError(f"bad rem= line: {lines[pos]!r}") from exc
    if k != count - 4 * n_blocks:
        raise FormatError(f"rem={k} inconsistent with count={count}")
    pos += 1
    tail = [line for line in lines[pos:] if line.strip()]
    if len(tail) != k:
        raise FormatError(f"expected {k} remainder lines, found {len(tail)}")
    remainder = tuple(parse_complex(line.strip()) for line in tail)
    return EncodedStream(a=a, t0=t0, count=count,
                         blocks=tuple(blocks), remainder=remainder)
