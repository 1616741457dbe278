class DomainError(ValueError):
    """Raised when an operation is applied outside the set where it is defined."""


class ParseError(ValueError):
    """Malformed partition or factor-set text.

    ``column`` is the 1-based character position of the offending token.
    """

    def __init__(self, message, text, column):
        super().__init__(f"{message} (column {column}): {text!r}")
        self.text = text
        self.column = column
