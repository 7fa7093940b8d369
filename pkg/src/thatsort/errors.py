"""Exception types shared across the toolkit."""


class ThatsortError(Exception):
    """Base class for all errors raised by this package."""


class MalformedLine(ThatsortError):
    """A corpus line that cannot be parsed (wrong column count, bad field)."""

    def __init__(self, message, line_no):
        super().__init__("line %d: %s" % (line_no, message))
        self.line_no = line_no


class NonContiguousIds(ThatsortError):
    """Token ids of a sentence are not 1..n."""

    def __init__(self, message, line_no):
        super().__init__("line %d: %s" % (line_no, message))
        self.line_no = line_no


class HeadOutOfRange(ThatsortError):
    """A head value does not resolve inside its sentence."""

    def __init__(self, message, line_no):
        super().__init__("line %d: %s" % (line_no, message))
        self.line_no = line_no


class MissingTagSeparator(ThatsortError):
    """A slash-tagged item carries no usable form/TAG separator."""

    def __init__(self, item, line_no):
        super().__init__("line %d: item %r has no form/TAG separator" % (line_no, item))
        self.item = item
        self.line_no = line_no


class UnknownGoldTag(ThatsortError):
    """A gold 'that' token carries a tag outside the gold tagset."""


class AlignmentMismatch(ThatsortError):
    """Two documents that must be token-aligned are not."""


class EmptyCorpus(ThatsortError):
    """An operation that needs tokens received none."""


class UntaggedToken(ThatsortError):
    """A training token has no usable tag."""


class EmptySentence(ThatsortError):
    """The tagger was asked to tag an empty form sequence."""


class VersionMismatch(ThatsortError):
    """A model file has the wrong magic string or format version."""


class CorruptModel(ThatsortError):
    """A model file is structurally broken."""


class ScheduleExceedsCorpus(ThatsortError):
    """A size schedule asks for more training files than exist."""


class EmptyType(ThatsortError):
    """A distance summary was requested for a clause type with no records."""
