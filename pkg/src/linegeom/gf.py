"""Exact arithmetic in prime fields GF(q)."""


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field of integers modulo a prime q.

    Elements are canonical residues in [0, q), so equality of residues is
    equality of field elements.  The int-level methods (add, sub, mul,
    neg, inv) take and return canonical residues and are what the model
    generators use in inner loops; element() wraps a residue as a
    FieldElement for operator syntax.
    """

    __slots__ = ("q",)

    def __init__(self, q):
        if not isinstance(q, int) or not _is_prime(q):
            raise ValueError(f"modulus must be a prime integer, got {q!r}")
        self.q = q

    def element(self, value):
        return FieldElement(self, value % self.q)

    def __call__(self, value):
        return self.element(value)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.q)]

    # residue-level arithmetic
    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def mul(self, a, b):
        return (a * b) % self.q

    def neg(self, a):
        return (-a) % self.q

    def inv(self, a):
        a %= self.q
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return pow(a, self.q - 2, self.q)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.q == other.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"


class FieldElement:
    """A canonical residue of a PrimeField, with operator overloads."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value % field.q

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(
                    f"mixed moduli: GF({self.field.q}) vs GF({other.field.q})"
                )
            return other.value
        if isinstance(other, int):
            return other % self.field.q
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, -self.value)

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value * self.field.inv(v))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.q
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}"
