"""Residue fields Z[zeta_5]/(pi) for unramified prime elements pi.

A prime of residue characteristic q and degree f is presented as the quotient
F_q[t]/(m(t)) where m is the irreducible factor of t^4 + t^3 + t^2 + t + 1
modulo q cut out by pi; the image of the root of unity is recorded so symbol
computations can compare against its powers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import ord_mod5, prime_power_split
from .cyclotomic import CycInt

PHI5 = (1, 1, 1, 1, 1)  # ascending coefficients of t^4 + t^3 + t^2 + t + 1


@dataclass(frozen=True)
class ResidueFieldDesc:
    """A concrete model of the field with q**f elements containing zeta's image."""

    q: int
    f: int
    modulus_poly: tuple[int, ...]  # monic, ascending coefficients, degree f
    zeta_image: tuple[int, ...]  # element of the field, length f

    @property
    def size(self) -> int:
        return self.q ** self.f


@dataclass(frozen=True)
class ResidueElem:
    """A field element as a coefficient vector of length f, reduced mod q."""

    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coeffs)


@dataclass(frozen=True)
class PrimeIdealRep:
    """A prime ideal of Z[zeta_5]: generator plus its residue-field model."""

    generator: CycInt
    q: int
    f: int
    field: ResidueFieldDesc

    def absolute_norm(self) -> int:
        return self.q ** self.f


def _elem_mul(desc: ResidueFieldDesc, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    q, f = desc.q, desc.f
    if f == 1:
        return (a[0] * b[0] % q,)
    if f == 2:
        # modulus t^2 - s*t + 1, so t^2 reduces to s*t - 1
        s = -desc.modulus_poly[1] % q
        t2 = a[1] * b[1]
        return ((a[0] * b[0] - t2) % q, (a[0] * b[1] + a[1] * b[0] + s * t2) % q)
    prod = [0] * (2 * f - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    mod = desc.modulus_poly
    for d in range(2 * f - 2, f - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for i in range(f):
                prod[d - f + i] -= c * mod[i]
    return tuple(v % q for v in prod[:f])


def _elem_pow(desc: ResidueFieldDesc, base: tuple[int, ...], e: int) -> tuple[int, ...]:
    result = _one_tuple(desc)
    while e:
        if e & 1:
            result = _elem_mul(desc, result, base)
        base = _elem_mul(desc, base, base)
        e >>= 1
    return result


def _one_tuple(desc: ResidueFieldDesc) -> tuple[int, ...]:
    return (1,) + (0,) * (desc.f - 1)


def _project_tuple(x: CycInt, desc: ResidueFieldDesc) -> tuple[int, ...]:
    q, f = desc.q, desc.f
    z = desc.zeta_image
    acc = (x.c0 % q,) + (0,) * (f - 1)
    power = z
    for coeff in (x.c1, x.c2, x.c3):
        if coeff % q:
            term = tuple(coeff * v % q for v in power)
            acc = tuple((u + v) % q for u, v in zip(acc, term))
        power = _elem_mul(desc, power, z)
    return acc


def project(x: CycInt, prime: PrimeIdealRep) -> ResidueElem:
    """Reduction of x modulo the prime: the ring map Z[zeta_5] -> F_{q^f}."""
    if isinstance(x, int):
        x = CycInt.from_int(x)
    return ResidueElem(_project_tuple(x, prime.field))


def add_in_field(x: ResidueElem, y: ResidueElem, prime: PrimeIdealRep) -> ResidueElem:
    q = prime.q
    return ResidueElem(tuple((u + v) % q for u, v in zip(x.coeffs, y.coeffs)))


def mul_in_field(x: ResidueElem, y: ResidueElem, prime: PrimeIdealRep) -> ResidueElem:
    return ResidueElem(_elem_mul(prime.field, x.coeffs, y.coeffs))


def pow_in_field(x: ResidueElem, e: int, prime: PrimeIdealRep) -> ResidueElem:
    """Square-and-multiply exponentiation; e must be nonnegative."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return ResidueElem(_elem_pow(prime.field, x.coeffs, e))


def _quadratic_factor_roots(q: int) -> list[int]:
    # The quadratic factors of PHI5 mod q are t^2 - s*t + 1 for the two roots
    # s of s^2 + s - 1 = 0 (images of z + z^4 and z^2 + z^3); exhaustive scan.
    return [s for s in range(q) if (s * s + s - 1) % q == 0]


def _make_desc(q: int, f: int, modulus: tuple[int, ...], zeta: tuple[int, ...]) -> ResidueFieldDesc:
    desc = ResidueFieldDesc(q, f, modulus, zeta)
    one = _one_tuple(desc)
    if _elem_pow(desc, zeta, 5) != one or zeta == one:
        raise ValueError("image of zeta does not have multiplicative order 5")
    return desc


def build_residue_field(pi: CycInt) -> PrimeIdealRep:
    """Residue-field model for the prime element pi (unramified, q != 5).

    The absolute norm must be q**f with q prime and f the order of q mod 5;
    the irreducible factor of t^4+t^3+t^2+t+1 carrying pi is selected in
    closed form for norm-form generators and by scan otherwise, then checked
    by projecting pi to zero.
    """
    if isinstance(pi, int):
        pi = CycInt.from_int(pi)
    n = pi.norm()
    if n == 0:
        raise ValueError("zero generates no prime ideal")
    if n % 5 == 0:
        raise ValueError("ramified prime above 5 is not supported")
    split = prime_power_split(n)
    if split is None:
        raise ValueError(f"norm {n} is not a prime power; generator is not prime")
    q, f = split
    if f not in (1, 2, 4) or f != ord_mod5(q):
        raise ValueError(f"norm {q}^{f} is inconsistent with a prime of Z[zeta_5]")

    if f == 4:
        desc = _make_desc(q, 4, PHI5, (0, 1, 0, 0))
    elif f == 2:
        roots = _quadratic_factor_roots(q)
        if len(roots) != 2:
            raise ValueError(f"t^4+t^3+t^2+t+1 has no quadratic factors mod {q}")
        c = pi.coeffs
        chosen = None
        if c[1] == 0 and c[2] == c[3] and c[2] % q != 0:
            # generator a - b*z^2 - b*z^3 from the norm form: z^2 + z^3 is
            # congruent to a/b, hence z + z^4 to -1 - a/b, which is the s of
            # the factor containing zeta's image.
            a, b = c[0], -c[2]
            s_target = (-1 - a * pow(b, -1, q)) % q
            if s_target in roots:
                chosen = s_target
        if chosen is None:
            for s in roots:
                cand = _make_desc(q, 2, (1, -s % q, 1), (0, 1))
                if all(v == 0 for v in _project_tuple(pi, cand)):
                    chosen = s
                    break
        if chosen is None:
            raise ValueError("no quadratic factor is killed by the generator")
        desc = _make_desc(q, 2, (1, -chosen % q, 1), (0, 1))
    else:
        fifth_roots = [r for r in range(2, q) if pow(r, 5, q) == 1]
        chosen_r = None
        for r in fifth_roots:
            if (pi.c0 + pi.c1 * r + pi.c2 * r * r + pi.c3 * r ** 3) % q == 0:
                chosen_r = r
                break
        if chosen_r is None:
            raise ValueError("no rational fifth root of unity is killed by the generator")
        desc = _make_desc(q, 1, (-chosen_r % q, 1), (chosen_r,))

    if any(v != 0 for v in _project_tuple(pi, desc)):
        raise ValueError("generator does not project to zero; it is not prime")
    return PrimeIdealRep(pi, q, f, desc)
