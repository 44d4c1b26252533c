"""Exception types shared across the package.

Every domain error derives from LiarError and carries a stable machine
readable ``code`` (snake_case) used by the CLI and the HTTP service.
"""


class LiarError(Exception):
    code = "error"


# --- sentence DSL ---

class ParseError(LiarError):
    """Base for structured parse failures; carries the offending line when known."""

    code = "parse_error"
    line: int | None = None


class MalformedLine(ParseError):
    code = "malformed_line"

    def __init__(self, line: int, text: str):
        super().__init__(f"line {line}: cannot parse claim: {text.strip()!r}")
        self.line = line
        self.text = text


class DuplicateSubject(ParseError):
    code = "duplicate_subject"

    def __init__(self, subject: int, line: int | None = None):
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"sentence ({subject}) declared more than once{at}")
        self.subject = subject
        self.line = line


class MissingSubject(ParseError):
    code = "missing_subject"

    def __init__(self, subject: int):
        super().__init__(f"sentence ({subject}) is missing: subjects must cover 1..n with no gaps")
        self.subject = subject


class TargetOutOfRange(ParseError):
    code = "target_out_of_range"

    def __init__(self, subject: int, target: int, line: int | None = None):
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"sentence ({subject}) points at ({target}), outside the system{at}")
        self.subject = subject
        self.target = target
        self.line = line


class EmptySystem(ParseError):
    code = "empty_system"

    def __init__(self):
        super().__init__("no claims found")


# --- classical inference ---

class TooLarge(LiarError):
    code = "too_large"

    def __init__(self, n: int, limit: int):
        super().__init__(f"system has {n} sentences; brute-force classification is capped at {limit}")
        self.n = n


# --- numerics ---

class NormalityViolation(LiarError):
    code = "normality_violation"


class ConvergenceFailure(LiarError):
    code = "convergence_failure"


class UnitarityViolation(LiarError):
    code = "unitarity_violation"


class HermiticityViolation(LiarError):
    code = "hermiticity_violation"


# --- quantization ---

class NotNormalized(LiarError):
    code = "not_normalized"


class StartNotOnCycle(LiarError):
    code = "start_not_on_cycle"

    def __init__(self, sentence: int, value: bool, tail_len: int):
        label = "true" if value else "false"
        super().__init__(
            f"token {sentence}:{label} reaches its cycle only after {tail_len} step(s); "
            "quantization needs a start token lying on its own cycle"
        )


# --- sessions ---

class ZeroAmplitudeOutcome(LiarError):
    code = "zero_amplitude_outcome"

    def __init__(self, sentence: int, value: bool):
        label = "true" if value else "false"
        super().__init__(f"hypothesis {sentence}:{label} has zero amplitude in the current state")
        self.sentence = sentence
        self.value = value


class NegativeDuration(LiarError):
    code = "negative_duration"

    def __init__(self, dt: float):
        super().__init__(f"evolution duration must be >= 0, got {dt}")


class BadRange(LiarError):
    code = "bad_range"


# --- service ---

class UnknownSession(LiarError):
    code = "unknown_session"

    def __init__(self, session_id: str):
        super().__init__(f"no session with id {session_id!r}")
        self.session_id = session_id


class PortInUse(LiarError):
    code = "port_in_use"

    def __init__(self, port: int):
        super().__init__(f"port {port} is already in use")
        self.port = port
