"""Exception types raised across the toolkit.

All errors derive from :class:`EmohmmError` so callers (and the CLI) can
distinguish data/processing failures from programming errors.
"""


class EmohmmError(Exception):
    """Base class for all toolkit errors."""


# --- audio ingestion ---

class MalformedContainer(EmohmmError):
    """File is not a structurally valid RIFF/WAVE container."""


class UnsupportedEncoding(EmohmmError):
    """WAV encoding outside the supported set (mono integer PCM)."""


class EmptyAudio(EmohmmError):
    """Audio file contains zero samples."""


class ClipTooShort(EmohmmError):
    """Clip is shorter than one analysis frame."""


# --- feature extraction ---

class DegenerateBand(EmohmmError):
    """Two mel filter edges map to the same FFT bin (fft_size too small)."""


class SilentFrame(EmohmmError):
    """Frame energy below the floor; no pitch estimate possible."""


# --- HMM ---

class DimensionMismatch(EmohmmError):
    """Observation dimension differs from the model's feature dimension."""


class EmptyObservation(EmohmmError):
    """Observation sequence has zero frames."""


class InsufficientData(EmohmmError):
    """Not enough frames to initialize every state/mixture."""


class NoData(EmohmmError):
    """Training was given an empty data set."""


# --- classification / evaluation ---

class MissingClass(EmohmmError):
    """A label has no training utterances."""


class EmptyTestSet(EmohmmError):
    """No test utterances remain after filtering."""


class EmptyRow(EmohmmError):
    """Confusion-matrix row has zero total; percentages undefined."""


class EmptyMatrix(EmohmmError):
    """Confusion matrix has zero total count."""


class BadLabel(EmohmmError):
    """String does not name one of the five emotion labels."""


class BadGender(EmohmmError):
    """String does not name a supported gender tag."""


# --- corpus manifests ---

class SchemaMismatch(EmohmmError):
    """Manifest header or row layout does not match the schema."""


class DuplicatePath(EmohmmError):
    """Two manifest rows reference the same audio path."""


class BadSplit(EmohmmError):
    """String does not name a train/test split."""


# --- model and bundle files ---

class ModelFormatError(EmohmmError):
    """Model file is corrupt or has an unsupported version."""


class BundleError(EmohmmError):
    """Model-set bundle directory is incomplete or inconsistent."""


class ConfigError(EmohmmError):
    """Run configuration file is invalid (unknown keys, bad values)."""
