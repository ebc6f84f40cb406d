"""Exception hierarchy shared across the library."""


class GazekitError(Exception):
    """Base class for all library errors."""


# --- scanpath construction ---

class EmptyScanpath(GazekitError):
    pass


class MalformedRow(GazekitError):
    def __init__(self, row_index, reason):
        self.row_index = row_index
        super().__init__(f"row {row_index}: {reason}")


class NonMonotonicTime(GazekitError):
    def __init__(self, row_index, reason):
        self.row_index = row_index
        super().__init__(f"row {row_index}: {reason}")


# --- dataset catalog ---

class RootNotFound(GazekitError):
    pass


class MalformedLayout(GazekitError):
    pass


class ConfigParseError(GazekitError):
    pass


class UnknownDataset(GazekitError):
    pass


class UnknownStimulus(GazekitError):
    pass


class UnknownSubject(GazekitError):
    pass


class NoScanpaths(GazekitError):
    pass


class MissingMap(GazekitError):
    pass


class DecodeError(GazekitError):
    pass


class DimensionMismatch(GazekitError):
    pass


# --- scanpath metrics ---

class LengthMismatch(GazekitError):
    pass


class KNonPositive(GazekitError):
    pass


class KTooLarge(GazekitError):
    pass


class ScanpathTooShort(GazekitError):
    pass


# --- saliency metrics ---

class AllZeroMap(GazekitError):
    pass


class NoFixations(GazekitError):
    pass


class ZeroVariance(GazekitError):
    pass


class ConstantMapWithoutJitter(GazekitError):
    pass


# --- map generation / statistics ---

class NonPositiveInput(GazekitError):
    pass


class EmptyFixationMap(GazekitError):
    pass


class NonPositiveSigma(GazekitError):
    pass


class NoData(GazekitError):
    pass


# --- rendering ---

class NothingToShow(GazekitError):
    pass
