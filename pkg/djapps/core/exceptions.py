class RiskFieldError(Exception):
    """Base class for every error raised by the risk field applications."""


class DomainError(RiskFieldError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ArityError(DomainError):
    pass


class ParseError(RiskFieldError):
    """
    Malformed input file. Row and column are 1-based and refer to the
    physical layout of the source (CSV line / JSON array index).
    """
    def __init__(self, message, row=None, column=None, path=None):
        self.message = message
        self.row = row
        self.column = column
        self.path = path
        super().__init__(str(self))

    def __str__(self):
        location = []
        if self.path:
            location.append(str(self.path))
        if self.row is not None:
            location.append('row %s' % self.row)
        if self.column is not None:
            location.append('column %s' % self.column)
        if location:
            return '%s: %s' % (', '.join(location), self.message)
        return self.message


class ValidationFailed(RiskFieldError):
    """Row-level validation failures collected from bound forms."""
    def __init__(self, errors):
        # errors: list of (row, field, message)
        self.errors = list(errors)
        super().__init__(str(self))

    def __str__(self):
        return '; '.join(
            'row %s, %s: %s' % (row, field, message)
            for row, field, message in self.errors)


class ConfigurationError(RiskFieldError):
    """Invalid run options; ``errors`` maps option names to messages."""
    def __init__(self, errors):
        self.errors = dict(errors)
        super().__init__('; '.join(
            '%s: %s' % (name, ' '.join(messages)) for name, messages in sorted(self.errors.items())))
