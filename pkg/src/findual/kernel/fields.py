"""Exact base fields: the rationals and prime fields GF(p).

Scalars are plain Python values (``fractions.Fraction`` over Q, canonical
residues ``int`` in [0, p) over GF(p)); a Field object supplies the arithmetic.
Both representations are canonical, so ``==`` on scalars is exact equality.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import BadParamsError, OrderUnavailableError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface; see Rationals and PrimeField."""

    kind: str

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def of(self, n):
        """Canonical image of a Python int (or Fraction over Q)."""
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, n: int):
        if n < 0:
            return self.pow(self.inv(x), -n)
        acc = self.one()
        base = x
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            n >>= 1
        return acc

    def sort_key(self, x):
        """Total order on scalars used for all deterministic outputs."""
        raise NotImplementedError

    def characteristic(self) -> int:
        raise NotImplementedError

    def scalar_to_json(self, x):
        raise NotImplementedError

    def scalar_from_json(self, doc):
        raise NotImplementedError


class Rationals(Field):
    kind = "rationals"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def of(self, n):
        return Fraction(n)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(x)

    def sort_key(self, x):
        return x

    def characteristic(self) -> int:
        return 0

    def scalar_to_json(self, x):
        return f"{x.numerator}/{x.denominator}"

    def scalar_from_json(self, doc):
        if not isinstance(doc, str) or "/" not in doc:
            raise BadParamsError(f"not a rational scalar: {doc!r}")
        num, den = doc.split("/", 1)
        return Fraction(int(num), int(den))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    kind = "prime-field"

    def __init__(self, p: int):
        if not is_prime(p):
            raise BadParamsError(f"modulus {p} is not prime")
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def of(self, n):
        return int(n) % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(x, self.p - 2, self.p)

    def pow(self, x, n: int):
        if n < 0:
            return pow(self.inv(x), -n, self.p)
        return pow(x, n, self.p)

    def sort_key(self, x):
        return x

    def characteristic(self) -> int:
        return self.p

    def elements(self):
        return range(self.p)

    def scalar_to_json(self, x):
        return int(x)

    def scalar_from_json(self, doc):
        if not isinstance(doc, int) or isinstance(doc, bool):
            raise BadParamsError(f"not a GF({self.p}) scalar: {doc!r}")
        return doc % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime-field", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_to_json(field: Field) -> dict:
    if isinstance(field, PrimeField):
        return {"kind": "prime-field", "p": field.p}
    return {"kind": "rationals"}


def field_from_json(doc) -> Field:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise BadParamsError(f"not a field spec: {doc!r}")
    if doc["kind"] == "rationals":
        return QQ
    if doc["kind"] == "prime-field":
        return PrimeField(doc["p"])
    raise BadParamsError(f"unknown field kind {doc['kind']!r}")


def proper_divisors(n: int):
    return [d for d in range(1, n) if n % d == 0]


def primitive_root_of_unity(field: Field, n: int):
    """Smallest scalar of multiplicative order exactly n, by canonical order.

    Over GF(p) this needs n | p - 1; over Q only n in {1, 2} is realizable.
    """
    if n < 1:
        raise BadParamsError(f"order must be positive, got {n}")
    if isinstance(field, Rationals):
        if n == 1:
            return field.one()
        if n == 2:
            return field.of(-1)
        raise OrderUnavailableError(f"no primitive {n}th root of unity in Q")
    p = field.p
    if (p - 1) % n != 0:
        raise OrderUnavailableError(f"{n} does not divide {p} - 1")
    divisors = proper_divisors(n)
    for x in range(1, p):
        if pow(x, n, p) != 1:
            continue
        if all(pow(x, d, p) != 1 for d in divisors):
            return x
    raise OrderUnavailableError(f"no element of order {n} in GF({p})")
