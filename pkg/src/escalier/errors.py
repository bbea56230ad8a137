class ParseError(ValueError):
    """Malformed textual input: terms, words, polynomials, or files."""
