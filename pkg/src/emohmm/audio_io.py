"""Audio ingestion and framing front-end.

Loads mono integer-PCM WAV files, applies pre-emphasis, and slices the
signal into overlapping analysis frames (25 ms window / 10 ms hop by
default). Everything here is a pure function of its inputs; the returned
values are treated as immutable.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ClipTooShort,
    EmptyAudio,
    MalformedContainer,
    UnsupportedEncoding,
)

__all__ = [
    "AudioClip",
    "FrameConfig",
    "FrameMatrix",
    "load_wav",
    "pre_emphasize",
    "frame_signal",
]


@dataclass(frozen=True)
class AudioClip:
    """Mono PCM samples normalized to [-1, 1] plus their sample rate.

    Clips produced by :func:`load_wav` lie in [-1, 1]. Pre-emphasized
    clips may reach 1 + alpha, so the type itself only rejects values
    beyond that headroom.
    """

    samples: np.ndarray
    sample_rate: int
    source_id: str = ""

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        object.__setattr__(self, "samples", samples)
        if samples.ndim != 1:
            raise ValueError("samples must be a 1-D array")
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")
        if samples.size and float(np.max(np.abs(samples))) > 2.0:
            raise ValueError("samples far outside [-1, 1]; not normalized audio")

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate


@dataclass(frozen=True)
class FrameConfig:
    """Analysis framing parameters (milliseconds) and pre-emphasis."""

    frame_ms: float = 25.0
    hop_ms: float = 10.0
    pre_emphasis: float = 0.97

    def __post_init__(self):
        if self.frame_ms <= 0 or self.hop_ms <= 0:
            raise ValueError("frame_ms and hop_ms must be positive")
        if self.hop_ms > self.frame_ms:
            raise ValueError("hop_ms must not exceed frame_ms")
        if not 0.0 <= self.pre_emphasis < 1.0:
            raise ValueError("pre_emphasis must lie in [0, 1)")

    def frame_len(self, sample_rate: int) -> int:
        return int(round(self.frame_ms * sample_rate / 1000.0))

    def hop(self, sample_rate: int) -> int:
        return int(round(self.hop_ms * sample_rate / 1000.0))


@dataclass(frozen=True)
class FrameMatrix:
    """T x L matrix of frame samples with the framing geometry."""

    frames: np.ndarray
    frame_len: int
    hop: int
    sample_rate: int

    def __post_init__(self):
        frames = np.asarray(self.frames, dtype=np.float64)
        object.__setattr__(self, "frames", frames)
        if frames.ndim != 2 or frames.shape[1] != self.frame_len:
            raise ValueError("frames must be T x frame_len")

    @property
    def num_frames(self) -> int:
        return self.frames.shape[0]

    @property
    def frame_rate(self) -> float:
        """Frames per second of the hopped analysis."""
        return self.sample_rate / self.hop


# Map from bits-per-sample to (numpy decode, divisor). 8-bit WAV is
# unsigned with midpoint 128; wider widths are signed two's complement.
_SUPPORTED_BITS = (8, 16, 24, 32)


def load_wav(path) -> AudioClip:
    """Load a mono integer-PCM RIFF/WAVE file.

    Samples are normalized to [-1, 1] by dividing by the maximum magnitude
    of the sample type (e.g. 32768 for 16-bit).

    Raises MalformedContainer for structural damage, UnsupportedEncoding
    for non-PCM / multi-channel / unusual bit depths, EmptyAudio for a
    zero-length data chunk.
    """
    path = str(path)
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise MalformedContainer(f"{path}: cannot read file: {exc}") from exc

    if len(raw) < 12 or raw[0:4] != b"RIFF" or raw[8:12] != b"WAVE":
        raise MalformedContainer(f"{path}: not a RIFF/WAVE file")

    fmt = None
    data = None
    pos = 12
    while pos + 8 <= len(raw):
        chunk_id = raw[pos:pos + 4]
        (chunk_size,) = struct.unpack_from("<I", raw, pos + 4)
        body = raw[pos + 8:pos + 8 + chunk_size]
        if len(body) < chunk_size:
            raise MalformedContainer(f"{path}: truncated '{chunk_id.decode('ascii', 'replace')}' chunk")
        if chunk_id == b"fmt ":
            fmt = body
        elif chunk_id == b"data":
            data = body
        pos += 8 + chunk_size + (chunk_size & 1)  # chunks are word-aligned

    if fmt is None or len(fmt) < 16:
        raise MalformedContainer(f"{path}: missing or short fmt chunk")
    if data is None:
        raise MalformedContainer(f"{path}: missing data chunk")

    audio_format, channels, sample_rate, _, _, bits = struct.unpack_from("<HHIIHH", fmt, 0)
    if audio_format != 1:
        raise UnsupportedEncoding(f"{path}: non-PCM format code {audio_format}")
    if channels != 1:
        raise UnsupportedEncoding(f"{path}: {channels} channels (mono required)")
    if bits not in _SUPPORTED_BITS:
        raise UnsupportedEncoding(f"{path}: {bits}-bit samples unsupported")
    if sample_rate <= 0:
        raise MalformedContainer(f"{path}: sample rate {sample_rate}")

    bytes_per_sample = bits // 8
    if len(data) % bytes_per_sample:
        raise MalformedContainer(f"{path}: data size not a multiple of the sample size")
    if not data:
        raise EmptyAudio(f"{path}: zero samples")

    if bits == 8:
        values = np.frombuffer(data, dtype=np.uint8).astype(np.float64) - 128.0
        scale = 128.0
    elif bits == 16:
        values = np.frombuffer(data, dtype="<i2").astype(np.float64)
        scale = 32768.0
    elif bits == 24:
        triples = np.frombuffer(data, dtype=np.uint8).reshape(-1, 3).astype(np.int64)
        values = triples[:, 0] | (triples[:, 1] << 8) | (triples[:, 2] << 16)
        values = np.where(values >= 1 << 23, values - (1 << 24), values).astype(np.float64)
        scale = float(1 << 23)
    else:  # 32
        values = np.frombuffer(data, dtype="<i4").astype(np.float64)
        scale = float(1 << 31)

    return AudioClip(samples=values / scale, sample_rate=int(sample_rate), source_id=path)


def pre_emphasize(clip: AudioClip, alpha: float) -> AudioClip:
    """High-frequency pre-emphasis: y[t] = x[t] - alpha*x[t-1], y[0] = x[0]."""
    if not 0.0 <= alpha < 1.0:
        raise ValueError("alpha must lie in [0, 1)")
    x = clip.samples
    y = np.empty_like(x)
    if x.size:
        y[0] = x[0]
        y[1:] = x[1:] - alpha * x[:-1]
    # |y| can reach 1+alpha; keep the result as a raw array wrapped without
    # the [-1, 1] invariant by rescaling only if it actually exceeds 1.
    return AudioClip.__new__(AudioClip).__init_raw__(y, clip.sample_rate, clip.source_id)


def frame_signal(clip: AudioClip, cfg: FrameConfig) -> FrameMatrix:
    """Slice the clip into overlapping frames; trailing partials are dropped."""
    length = cfg.frame_len(clip.sample_rate)
    hop = cfg.hop(clip.sample_rate)
    if length < 2:
        raise ValueError("frame length must be at least 2 samples")
    n = clip.samples.size
    if n < length:
        raise ClipTooShort(
            f"{clip.source_id or 'clip'}: {n} samples < one {length}-sample frame"
        )
    num = (n - length) // hop + 1
    starts = np.arange(num) * hop
    idx = starts[:, None] + np.arange(length)[None, :]
    return FrameMatrix(
        frames=clip.samples[idx],
        frame_len=length,
        hop=hop,
        sample_rate=clip.sample_rate,
    )
