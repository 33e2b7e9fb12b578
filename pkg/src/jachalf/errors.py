"""Exception types shared across the library."""


class JachalfError(Exception):
    """Base class for all library errors."""


class NotPrime(JachalfError):
    """The characteristic is not a (probable) prime."""


class CharacteristicTwo(JachalfError):
    """Characteristic 2 is excluded."""


class ReducibleModulus(JachalfError):
    """The extension modulus is not irreducible over F_p."""


class DivisionByZero(JachalfError, ZeroDivisionError):
    """Division by the zero element or zero polynomial."""


class CtxMismatch(JachalfError):
    """Operands belong to different field contexts."""


class TowerExhausted(JachalfError):
    """A square root would need a field above the quadratic tower step."""


class DuplicateRoot(JachalfError):
    """Curve roots must be pairwise distinct."""


class EvenDegree(JachalfError):
    """Even-degree models (two points at infinity) are not supported."""


class NotOnCurve(JachalfError):
    """The coordinates do not satisfy the curve equation."""


class CurveMismatch(JachalfError):
    """Operands belong to different curves."""


class InvalidDivisor(JachalfError):
    """A Mumford pair violating monicity, degree bounds, or U | V^2 - f."""


class FieldTooLarge(JachalfError):
    """The enumeration field exceeds the desk-scale scan bound."""


class InfinityInput(JachalfError):
    """The point at infinity is not accepted here."""


class InternalInvariantViolation(JachalfError):
    """A proven-impossible condition occurred; indicates an implementation bug."""


class NotAHalf(JachalfError):
    """The divisor class does not double to the given point."""


class WeierstrassCollision(JachalfError):
    """U vanishes at a curve root; cannot happen for a genuine half."""


class PointNotRational(JachalfError):
    """Point coordinates lie outside the prime field."""


class NonRationalCurve(JachalfError):
    """The curve polynomial does not have prime-field coefficients."""


class ParseError(JachalfError):
    """Malformed input file or command-line operand."""
