"""Exception hierarchy.

Each class maps to one CLI exit status (see ``abcdgen.cli``).
"""


class ABCDError(Exception):
    """Base class for all generator errors."""

    exit_code = 3


class ConfigError(ABCDError, ValueError):
    """Invalid or contradictory user input."""

    exit_code = 1


class ParseError(ConfigError):
    """Malformed artifact file; message carries the file name and line number."""

    def __init__(self, message, source=None, line=None):
        self.source = source
        self.line = line
        where = ""
        if source is not None:
            where = f"{source}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(where + message)


class InfeasibleError(ABCDError):
    """The instance admits no valid graph (no admissible sizes or assignment)."""

    exit_code = 2


class AntiCommunityError(InfeasibleError):
    """Requested mu exceeds the threshold above which communities become anti-communities."""

    def __init__(self, mu, threshold, variant):
        self.mu = mu
        self.threshold = threshold
        self.variant = variant
        name = "mu0" if variant == "global" else "mu1"
        super().__init__(
            f"anti-community regime: mu={mu:g} exceeds {name}={threshold:.6g} "
            f"({variant} variant); the implied xi would be greater than 1"
        )


class GenerationError(ABCDError, RuntimeError):
    """Edge generation could not reach its target within the attempt budget."""

    exit_code = 3
