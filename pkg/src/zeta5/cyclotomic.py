"""Exact arithmetic in Z[zeta_5], the ring of integers of the fifth cyclotomic field.

Elements are stored on the integral basis {1, z, z^2, z^3} where z is a fixed
primitive fifth root of unity; the relation z^4 = -(1 + z + z^2 + z^3) is
applied eagerly, so equality is coefficient comparison.  All coefficients are
arbitrary-precision integers.
"""

from __future__ import annotations


class NotNormalizable(ValueError):
    """Raised when no unit of the form +-z^a yields a semiprimary associate."""


class CycInt:
    """An element c0 + c1*z + c2*z^2 + c3*z^3 of Z[zeta_5].

    Instances are immutable; arithmetic returns new values.  Plain ints mix
    freely with CycInt in +, - and *.
    """

    __slots__ = ("_c",)

    def __init__(self, c0: int = 0, c1: int = 0, c2: int = 0, c3: int = 0) -> None:
        for v in (c0, c1, c2, c3):
            if not isinstance(v, int):
                raise TypeError(f"coefficients must be int, got {type(v).__name__}")
        self._c = (c0, c1, c2, c3)

    @classmethod
    def from_int(cls, n: int) -> CycInt:
        return cls(n, 0, 0, 0)

    @classmethod
    def zero(cls) -> CycInt:
        return cls(0, 0, 0, 0)

    @classmethod
    def one(cls) -> CycInt:
        return cls(1, 0, 0, 0)

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return self._c

    @property
    def c0(self) -> int:
        return self._c[0]

    @property
    def c1(self) -> int:
        return self._c[1]

    @property
    def c2(self) -> int:
        return self._c[2]

    @property
    def c3(self) -> int:
        return self._c[3]

    def is_zero(self) -> bool:
        return self._c == (0, 0, 0, 0)

    def is_rational(self) -> bool:
        """True when the element lies in Z."""
        return self._c[1] == 0 and self._c[2] == 0 and self._c[3] == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._c == (other, 0, 0, 0)
        if isinstance(other, CycInt):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"CycInt{self._c}"

    def __str__(self) -> str:
        parts = []
        for i, v in enumerate(self._c):
            if v == 0:
                continue
            unit = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            mag = abs(v)
            body = unit if (mag == 1 and unit) else (f"{mag}*{unit}" if unit else str(mag))
            parts.append(("- " if v < 0 else "+ ") + body)
        if not parts:
            return "0"
        head = parts[0].replace("+ ", "", 1).replace("- ", "-", 1)
        return " ".join([head] + parts[1:])

    def __neg__(self) -> CycInt:
        return CycInt(*(-v for v in self._c))

    def __add__(self, other: int | CycInt) -> CycInt:
        if isinstance(other, int):
            other = CycInt.from_int(other)
        elif not isinstance(other, CycInt):
            return NotImplemented
        return CycInt(*(a + b for a, b in zip(self._c, other._c)))

    __radd__ = __add__

    def __sub__(self, other: int | CycInt) -> CycInt:
        if isinstance(other, int):
            other = CycInt.from_int(other)
        elif not isinstance(other, CycInt):
            return NotImplemented
        return CycInt(*(a - b for a, b in zip(self._c, other._c)))

    def __rsub__(self, other: int | CycInt) -> CycInt:
        return (-self) + other

    def __mul__(self, other: int | CycInt) -> CycInt:
        if isinstance(other, int):
            return CycInt(*(v * other for v in self._c))
        if not isinstance(other, CycInt):
            return NotImplemented
        a, b = self._c, other._c
        conv = [0] * 7
        for i in range(4):
            ai = a[i]
            if ai:
                for j in range(4):
                    conv[i + j] += ai * b[j]
        # z^5 = 1 folds degree 5, 6 back down; z^4 = -(1 + z + z^2 + z^3).
        c4 = conv[4]
        return CycInt(
            conv[0] + conv[5] - c4,
            conv[1] + conv[6] - c4,
            conv[2] - c4,
            conv[3] - c4,
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycInt:
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = CycInt.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self, k: int) -> CycInt:
        """Apply the field automorphism z -> z^k, for k in {1, 2, 3, 4}."""
        if k not in (1, 2, 3, 4):
            raise ValueError("conjugation index must be in {1, 2, 3, 4}")
        acc = [0] * 5
        for i, v in enumerate(self._c):
            acc[i * k % 5] += v
        t = acc[4]
        return CycInt(acc[0] - t, acc[1] - t, acc[2] - t, acc[3] - t)

    def cofactor(self) -> CycInt:
        """Product of the three nontrivial conjugates; self * cofactor = norm."""
        return self.conjugate(2) * self.conjugate(3) * self.conjugate(4)

    def norm(self) -> int:
        """Absolute norm over Q: the product of all four conjugates.

        Always a nonnegative rational integer (the four embeddings pair off
        into complex conjugates); norm(n) = n^4 for rational n.
        """
        full = self * self.cofactor()
        if full._c[1] or full._c[2] or full._c[3]:
            raise ArithmeticError("conjugate product failed to be rational")
        return full._c[0]

    def is_unit(self) -> bool:
        return self.norm() == 1


ZETA = CycInt(0, 1, 0, 0)
ONE = CycInt.one()
LAMBDA = ONE - ZETA  # the ramified prime above 5
_LAMBDA_SQUARED = LAMBDA * LAMBDA


def div_exact(x: CycInt, y: CycInt) -> CycInt | None:
    """Exact quotient x / y in Z[zeta_5], or None when y does not divide x.

    Computed as x * cofactor(y) / norm(y) with an integrality check on every
    coefficient; since {1, z, z^2, z^3} is a Z-basis this test is exact.
    """
    if isinstance(x, int):
        x = CycInt.from_int(x)
    if isinstance(y, int):
        y = CycInt.from_int(y)
    if y.is_zero():
        raise ZeroDivisionError("division by zero in Z[zeta_5]")
    cof = y.cofactor()
    n = (y * cof).c0
    num = x * cof
    if any(v % n for v in num.coeffs):
        return None
    return CycInt(*(v // n for v in num.coeffs))


def semiprimary_residue(x: CycInt) -> int | None:
    """The rational residue of x modulo (1 - z)^2, or None if there is none.

    An element congruent to a rational integer mod (1 - z)^2 is called
    semiprimary; rational residues can always be taken in {0, ..., 4}.
    """
    for c in range(5):
        if div_exact(x - c, _LAMBDA_SQUARED) is not None:
            return c
    return None


def is_semiprimary(x: CycInt) -> bool:
    """Semiprimary and coprime to the ramified prime above 5."""
    return x.norm() % 5 != 0 and semiprimary_residue(x) is not None


def semiprimary_normalize(x: CycInt) -> CycInt:
    """Return the associate u*x (u = +-z^a) that is semiprimary.

    Candidate units are tried in the fixed order +z^0..+z^4, -z^0..-z^4, so
    the result is deterministic.  Raises NotNormalizable when norm(x) is
    divisible by 5, or if no candidate works (not observed for valid inputs;
    kept as an explicit escape hatch rather than an assertion).
    """
    n = x.norm()
    if n == 0 or n % 5 == 0:
        raise NotNormalizable("element is not coprime to 1 - z")
    for sign in (1, -1):
        cand = x * sign
        for _ in range(5):
            if semiprimary_residue(cand) is not None:
                return cand
            cand = cand * ZETA
    raise NotNormalizable("no unit +-z^a yields a semiprimary associate")


class QuadraticInt:
    """An element a + b*phi of Z[(1 + sqrt 5)/2], with phi the golden ratio.

    Serves as the carrier for norm-form computations: the quadratic norm is
    a^2 + a*b - b^2, and embedding into Z[zeta_5] (via phi = -z^2 - z^3)
    squares it.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: int, b: int) -> None:
        if not isinstance(a, int) or not isinstance(b, int):
            raise TypeError("coefficients must be int")
        self._a = a
        self._b = b

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadraticInt):
            return self._a == other._a and self._b == other._b
        if isinstance(other, int):
            return self._a == other and self._b == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __repr__(self) -> str:
        return f"QuadraticInt({self._a}, {self._b})"

    def __neg__(self) -> QuadraticInt:
        return QuadraticInt(-self._a, -self._b)

    def __add__(self, other: int | QuadraticInt) -> QuadraticInt:
        if isinstance(other, int):
            other = QuadraticInt(other, 0)
        elif not isinstance(other, QuadraticInt):
            return NotImplemented
        return QuadraticInt(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other: int | QuadraticInt) -> QuadraticInt:
        return self + (-other if isinstance(other, QuadraticInt) else QuadraticInt(-other, 0))

    def __mul__(self, other: int | QuadraticInt) -> QuadraticInt:
        if isinstance(other, int):
            return QuadraticInt(self._a * other, self._b * other)
        if not isinstance(other, QuadraticInt):
            return NotImplemented
        # phi^2 = phi + 1
        bd = self._b * other._b
        return QuadraticInt(self._a * other._a + bd, self._a * other._b + self._b * other._a + bd)

    __rmul__ = __mul__

    def norm_form(self) -> int:
        """The quadratic norm a^2 + a*b - b^2 (can be negative)."""
        return self._a * self._a + self._a * self._b - self._b * self._b

    def embed(self) -> CycInt:
        return CycInt(self._a, 0, -self._b, -self._b)


def embed_quadratic(x: QuadraticInt) -> CycInt:
    """Ring embedding of Z[(1 + sqrt 5)/2] into Z[zeta_5] via phi = -z^2 - z^3."""
    return x.embed()
