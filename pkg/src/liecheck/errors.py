"""Exception hierarchy. Every error raised on purpose derives from LiecheckError."""


class LiecheckError(Exception):
    """Base class; the CLI maps these to exit code 2 unless stated otherwise."""


class DimensionMismatch(LiecheckError, ValueError):
    pass


class DimensionTooLarge(LiecheckError, ValueError):
    pass


class PfaffianOnOddDim(LiecheckError, ValueError):
    pass


class PfaffianOnNonAntisymmetric(LiecheckError, ValueError):
    pass


class JacobiViolation(LiecheckError, ValueError):
    def __init__(self, i, j, k, residual):
        self.triple = (i, j, k)
        self.residual = tuple(residual)
        super().__init__(
            f"Jacobi identity fails on (e{i + 1}, e{j + 1}, e{k + 1}); "
            f"residual {[str(c) for c in self.residual]}"
        )


class RepresentationInvalid(LiecheckError, ValueError):
    pass


class MissingParameter(LiecheckError, ValueError):
    pass


class UnknownAlgebra(LiecheckError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown algebra"


class NotAnIsomorphism(LiecheckError, ValueError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotAlmostComplex(LiecheckError, ValueError):
    pass


class Underdetermined(LiecheckError, ValueError):
    pass


class SingularMap(LiecheckError, ValueError):
    pass


class NotADerivation(LiecheckError, ValueError):
    pass


class OddDimension(LiecheckError, ValueError):
    pass


class NotAntisymmetric(LiecheckError, ValueError):
    pass


class NotSymmetric(LiecheckError, ValueError):
    pass


class NotCompatible(LiecheckError, ValueError):
    pass


class Degenerate(LiecheckError, ValueError):
    pass


class DegenerateMetric(Degenerate):
    pass


class NotACotangent(LiecheckError, ValueError):
    pass


class NotTotallyReal(LiecheckError, ValueError):
    pass


class NotIntegrable(LiecheckError, ValueError):
    pass


class MetricNotAdInvariant(LiecheckError, ValueError):
    pass


class NotASubalgebra(LiecheckError, ValueError):
    pass


class NotationError(LiecheckError, ValueError):
    pass


class DocumentError(LiecheckError, ValueError):
    """Malformed input document; carries a line/column when JSON parsing failed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
