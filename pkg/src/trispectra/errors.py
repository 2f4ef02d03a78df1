"""Exception hierarchy shared by all trispectra modules."""

from __future__ import annotations


class TrispectraError(Exception):
    """Base class for all library errors."""


class SizeLimit(TrispectraError):
    """A structure exceeds a configured cap (carrier size or ideal count)."""

    def __init__(self, what: str, count: int, cap: int):
        self.what = what
        self.count = count
        self.cap = cap
        super().__init__(f"{what} = {count} exceeds cap {cap}")


class AxiomViolation(TrispectraError):
    """A ring or triring law fails; carries the law name and a witness."""

    def __init__(self, law: str, witness=None, detail: str = ""):
        self.law = law
        self.witness = witness
        msg = f"{law} fails" + (f" at {witness!r}" if witness is not None else "")
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NotAHomomorphism(AxiomViolation):
    """A structure map (lambda or rho) is not a unital ring homomorphism."""

    def __init__(self, which: str, witness):
        super().__init__(f"{which}-homomorphism", witness)
        self.which = which


class LocalIdentityMismatch(AxiomViolation):
    """lambda or rho does not send the even identity to the local identity."""

    def __init__(self, which: str, got: int, expected: int):
        super().__init__(
            f"{which}-local-identity", got, detail=f"expected index {expected}"
        )
        self.which = which


class Axiom3Violation(AxiomViolation):
    """Left and right translates of an even element generate different odd ideals."""

    def __init__(self, x0: int):
        super().__init__("odd-translation", x0)
        self.x0 = x0


class TriassocViolation(AxiomViolation):
    """The triassociative law fails; witness is (side, x, alpha, beta)."""

    def __init__(self, witness):
        super().__init__("triassociativity", witness)


class OddOnly(TrispectraError):
    """An operation defined only on odd elements received a mixed element."""


class NotAHom(TrispectraError):
    """A candidate map between trirings fails a homomorphism condition."""

    def __init__(self, condition: str, witness):
        self.condition = condition
        self.witness = witness
        super().__init__(f"not a triring homomorphism: {condition} fails at {witness!r}")


class NotPrimeInput(TrispectraError):
    """An operation requiring a prime ideal received a non-prime one."""


class EmptySet(TrispectraError):
    """Irreducibility is undefined for the empty closed set."""


class NotACover(TrispectraError):
    """A claimed open cover misses a point of the target set."""

    def __init__(self, point_repr: str):
        self.point_repr = point_repr
        super().__init__(f"open family does not cover the target; misses {point_repr}")


class DocumentError(TrispectraError):
    """Base class for triring-document input errors."""


class ParseError(DocumentError):
    """The document is not well-formed JSON."""

    def __init__(self, line: int, column: int, expected: str):
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(f"parse error at line {line}, column {column}: {expected}")


class SchemaError(DocumentError):
    """The document is valid JSON but violates the schema."""

    def __init__(self, field: str, reason: str):
        self.field = field
        self.reason = reason
        super().__init__(f"schema error in field {field!r}: {reason}")


class RangeError(DocumentError):
    """An index in the document is outside its carrier range."""

    def __init__(self, field: str, index: int):
        self.field = field
        self.index = index
        super().__init__(f"index {index} out of range in field {field!r}")
