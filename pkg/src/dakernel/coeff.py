"""Exact coefficient fields: the rationals, GF(p) and GF(p^k).

Field elements are plain Python values in canonical form: ``Fraction`` for
the rationals, ``int`` residues for GF(p), and for GF(p^k) an ``int`` code
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` standing for the residue
``c_0 + c_1 w + ... + c_{k-1} w^{k-1}`` modulo the defining polynomial.
Because elements are canonical, ``==`` and hashing work directly on them.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

import numpy as np

FieldElem = Union[int, Fraction]

MAX_EXTENSION_SIZE = 2**20


class FieldError(ValueError):
    pass


def smallest_factor(n: int) -> int:
    if n < 2:
        return n
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


class Field:
    """Handle for one coefficient field; all arithmetic goes through it."""

    def __init__(self, kind: str, p: int = 0, k: int = 1, modulus: Sequence[int] | None = None,
                 gen_name: str = "w"):
        self.kind = kind
        self.p = p
        self.k = k
        self.gen_name = gen_name
        if kind == "rationals":
            self.q = None
            self.modulus = None
            self.zero, self.one = Fraction(0), Fraction(1)
            return
        d = smallest_factor(p)
        if p < 2 or d != p:
            raise FieldError(f"{p} = {d}·{p // d}" if p >= 2 else f"{p} is not prime")
        self.q = p**k
        self.zero, self.one = 0, 1
        if kind == "prime":
            self.modulus = None
            return
        if self.q > MAX_EXTENSION_SIZE:
            raise FieldError(f"GF({p}^{k}) exceeds the size cap {MAX_EXTENSION_SIZE}")
        modulus = [int(c) % p for c in modulus]
        while modulus and modulus[-1] == 0:
            modulus.pop()
        if len(modulus) != k + 1:
            raise FieldError(f"modulus must have degree {k}")
        inv_lead = pow(modulus[-1], -1, p)
        self.modulus = tuple(c * inv_lead % p for c in modulus)
        factor = _find_factor(self.modulus, p)
        if factor is not None:
            raise FieldError(
                f"modulus {_format_upoly(self.modulus, gen_name)} is reducible: "
                f"divisible by {_format_upoly(factor, gen_name)}"
            )
        self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _digits(self, code: int) -> list[int]:
        out = []
        for _ in range(self.k):
            code, r = divmod(code, self.p)
            out.append(r)
        return out

    def _code(self, digits: Sequence[int]) -> int:
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    def _times(self, a: list[int], b: list[int]) -> list[int]:
        p, k, mod = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i]
            if c:
                for j in range(k + 1):
                    prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        return prod[:k]

    def _build_tables(self):
        q = self.q
        for cand in range(2, q) if q > 2 else [1]:
            g = self._digits(cand)
            exp = [1]
            cur = g
            while True:
                code = self._code(cur)
                if code == 1:
                    break
                exp.append(code)
                cur = self._times(cur, g)
            if len(exp) == q - 1:
                break
        log = [0] * q
        for i, c in enumerate(exp):
            log[c] = i
        zech = []
        for d in range(q - 1):
            digits = self._digits(exp[d])
            digits[0] = (digits[0] + 1) % self.p
            c = self._code(digits)
            zech.append(-1 if c == 0 else log[c])
        self._exp, self._log, self._zech = exp, log, zech
        self._half = (q - 1) // 2 if self.p != 2 else 0
        self._np = (np.array(exp + exp, dtype=np.int64), np.array(log, dtype=np.int64),
                    np.array(zech, dtype=np.int64))

    # -- arithmetic -------------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind != "rationals"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def frobenius_order(self) -> int:
        return self.k if self.kind == "extension" else 1

    def from_int(self, n: int) -> FieldElem:
        if self.kind == "rationals":
            return Fraction(n)
        return n % self.p

    def gen(self) -> FieldElem:
        if self.kind != "extension":
            raise FieldError("only extension fields have a generator")
        if self.k > 1:
            return self.p
        return (-self.modulus[0]) % self.p

    def add(self, a, b):
        if self.kind == "extension":
            if a == 0:
                return b
            if b == 0:
                return a
            n = self.q - 1
            i = self._log[a]
            z = self._zech[(self._log[b] - i) % n]
            return 0 if z < 0 else self._exp[(i + z) % n]
        if self.kind == "prime":
            return (a + b) % self.p
        return a + b

    def neg(self, a):
        if self.kind == "extension":
            if a == 0 or self.p == 2:
                return a
            return self._exp[(self._log[a] + self._half) % (self.q - 1)]
        if self.kind == "prime":
            return (-a) % self.p
        return -a

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.kind == "extension":
            if a == 0 or b == 0:
                return 0
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        if self.kind == "prime":
            return a * b % self.p
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "extension":
            return self._exp[(-self._log[a]) % (self.q - 1)]
        if self.kind == "prime":
            return pow(a, -1, self.p)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        if self.kind == "extension":
            if a == 0:
                return self.one if n == 0 else 0
            return self._exp[(self._log[a] * n) % (self.q - 1)]
        if self.kind == "prime":
            return pow(a, n, self.p)
        return a**n

    def frobenius(self, a, j: int = 1):
        """``a^(p^j)``; the identity on prime fields and on the rationals."""
        if self.kind != "extension" or j % self.k == 0 or a == 0:
            return a
        return self._exp[(self._log[a] * self.p ** (j % self.k)) % (self.q - 1)]

    def elements(self) -> Iterator[FieldElem]:
        if not self.is_finite:
            raise FieldError("the rationals are not enumerable")
        return iter(range(self.q))

    def random_element(self, rng):
        if self.is_finite:
            return rng.randrange(self.q)
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    # vectorised arithmetic on numpy code arrays (finite fields only)

    def vadd(self, a, b):
        if self.kind == "prime":
            return (a + b) % self.p
        exp, log, zech = self._np
        n = self.q - 1
        la, lb = log[a], log[b]
        z = zech[(lb - la) % n]
        out = np.where(z < 0, 0, exp[(la + np.maximum(z, 0)) % n])
        out = np.where(a == 0, b, out)
        return np.where(b == 0, a, out)

    def vmul(self, a, b):
        if self.kind == "prime":
            return a * b % self.p
        exp, log, _ = self._np
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vpow(self, a, n: int):
        if n == 1:
            return a
        if self.kind == "prime":
            out = np.ones_like(a)
            for _ in range(n):
                out = out * a % self.p
            return out
        exp, log, _ = self._np
        out = exp[(log[a] * n) % (self.q - 1)]
        return np.where(a == 0, 0 if n else 1, out)

    # -- display ---------------------------------------------------------------

    def format(self, a) -> str:
        if self.kind == "extension":
            return _format_upoly(self._digits(a), self.gen_name)
        return str(a)

    def to_json(self, a):
        if self.kind == "prime":
            return int(a)
        if self.kind == "rationals" and a.denominator == 1:
            return int(a)
        return self.format(a)

    def describe(self) -> str:
        if self.kind == "rationals":
            return "q"
        if self.kind == "prime":
            return f"gf {self.p}"
        return f"gf {self.p}^{self.k} modulus {_format_upoly(self.modulus, self.gen_name)}"

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.kind, self.p, self.k, self.modulus)

    def __repr__(self):
        if self.kind == "rationals":
            return "QQ"
        if self.kind == "prime":
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"


# -- univariate polynomials over GF(p) given as int lists (low degree first) --

def _format_upoly(coeffs: Sequence[int], x: str) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (x if i == 1 else f"{x}^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


def _poly_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for j, y in enumerate(b):
            a[shift + j] = (a[shift + j] - c * y) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _find_factor(modulus: Sequence[int], p: int) -> tuple[int, ...] | None:
    """A monic factor of degree <= k/2, by exhaustive search."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            cand = tuple(low) + (1,)
            if not _poly_mod_p(modulus, cand, p):
                return cand
    return None


def is_irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    coeffs = [c % p for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        return False
    return _find_factor(coeffs, p) is None


def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=k):
        cand = tuple(reversed(low)) + (1,)
        if cand[0] and is_irreducible_mod_p(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


def parse_upoly(text: str, p: int, x: str = "w") -> list[int]:
    """Parse ``w^2+w+1`` style text into a coefficient list mod p."""
    text = text.replace(" ", "").replace("-", "+-")
    coeffs: dict[int, int] = {}
    for term in filter(None, text.split("+")):
        m = re.fullmatch(rf"(-?\d*)\*?({re.escape(x)}(?:\^(\d+))?)?", term)
        if not m or (not m.group(1) and not m.group(2)) or m.group(1) == "-" and not m.group(2):
            raise FieldError(f"cannot parse polynomial term {term!r}")
        c = m.group(1)
        c = 1 if c in ("", None) else (-1 if c == "-" else int(c))
        deg = 0 if not m.group(2) else int(m.group(3) or 1)
        coeffs[deg] = coeffs.get(deg, 0) + c
    out = [0] * (max(coeffs) + 1 if coeffs else 1)
    for d, c in coeffs.items():
        out[d] = c % p
    return out


# -- constructors -------------------------------------------------------------

def rationals() -> Field:
    return Field("rationals")


@lru_cache(maxsize=None)
def prime_field(p: int) -> Field:
    return Field("prime", p)


def extension_field(p: int, k: int, modulus: Sequence[int] | str | None = None,
                    gen_name: str = "w") -> Field:
    if k == 1 and modulus is None:
        return prime_field(p)
    if modulus is None:
        modulus = first_irreducible(p, k)
    elif isinstance(modulus, str):
        modulus = parse_upoly(modulus, p, gen_name)
    return _extension_cached(p, k, tuple(modulus), gen_name)


@lru_cache(maxsize=None)
def _extension_cached(p, k, modulus, gen_name):
    return Field("extension", p, k, modulus, gen_name)


def make_field(desc) -> Field:
    """Build a field from ``"gf 5"``, ``"gf 2^2 modulus w^2+w+1"``, ``"q"``
    or tuples ``("prime", p)``, ``("extension", p, k, modulus)``."""
    if isinstance(desc, Field):
        return desc
    if isinstance(desc, str):
        parts = desc.split()
        if parts in (["q"], ["Q"], ["rationals"]):
            return rationals()
        if parts and parts[0] == "gf" and len(parts) >= 2:
            size = parts[1]
            if "^" in size:
                p, k = (int(t) for t in size.split("^"))
            else:
                p, k = int(size), 1
            modulus = None
            if len(parts) > 2:
                if parts[2] != "modulus" or len(parts) < 4:
                    raise FieldError(f"unrecognised field spec {desc!r}")
                modulus = "".join(parts[3:])
            d = smallest_factor(p)
            if d != p:
                raise FieldError(f"{p} = {d}·{p // d}")
            if k == 1 and modulus is None:
                return prime_field(p)
            return extension_field(p, k, modulus)
        raise FieldError(f"unrecognised field spec {desc!r}")
    kind = desc[0]
    if kind == "rationals":
        return rationals()
    if kind == "prime":
        d = smallest_factor(desc[1])
        if d != desc[1]:
            raise FieldError(f"{desc[1]} = {d}·{desc[1] // d}")
        return prime_field(desc[1])
    if kind == "extension":
        return extension_field(*desc[1:])
    raise FieldError(f"unrecognised field spec {desc!r}")


def field_inverse(field: Field, a):
    return field.inv(a)


def frobenius(field: Field, a, j: int = 1):
    return field.frobenius(a, j)


@lru_cache(maxsize=None)
def extend(field: Field, d: int):
    """Return ``(L, embed)`` with ``L = GF(q^d)`` and ``embed`` a field embedding."""
    if not field.is_finite:
        raise FieldError("extensions are only available for finite fields")
    if d == 1:
        return field, _identity
    p, k = field.p, field.k
    big = extension_field(p, k * d)
    if field.kind == "prime":
        return big, big.from_int
    root = next(r for r in big.elements() if _eval_base_modulus(big, field.modulus, r) == 0)
    powers = [big.one]
    for _ in range(k - 1):
        powers.append(big.mul(powers[-1], root))
    table = []
    for code in range(field.q):
        acc = 0
        for digit, pw in zip(field._digits(code), powers):
            if digit:
                acc = big.add(acc, big.mul(big.from_int(digit), pw))
        table.append(acc)
    return big, table.__getitem__


def _identity(a):
    return a


def _eval_base_modulus(big: Field, modulus, r):
    acc = 0
    for c in reversed(modulus):
        acc = big.add(big.mul(acc, r), big.from_int(c))
    return acc


# -- univariate polynomials over an arbitrary Field (coefficient lists) -------

def up_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def up_sub(F: Field, a, b):
    n = max(len(a), len(b))
    out = [F.sub(a[i] if i < len(a) else F.zero, b[i] if i < len(b) else F.zero) for i in range(n)]
    return up_trim(out)


def up_mul(F: Field, a, b):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x != 0:
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return up_trim(out)


def up_divmod(F: Field, a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = F.inv(b[-1])
    quo = [F.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = F.mul(a[-1], inv)
        shift = len(a) - len(b)
        quo[shift] = c
        for j, y in enumerate(b):
            a[shift + j] = F.sub(a[shift + j], F.mul(c, y))
        a.pop()
        up_trim(a)
    return up_trim(quo), a


def up_monic(F: Field, a):
    if not a:
        return a
    inv = F.inv(a[-1])
    return [F.mul(c, inv) for c in a]


def up_gcd(F: Field, a, b):
    a, b = up_trim(list(a)), up_trim(list(b))
    while b:
        a, b = b, up_divmod(F, a, b)[1]
    return up_monic(F, a)


def up_deriv(F: Field, a):
    return up_trim([F.mul(F.from_int(i), a[i]) for i in range(1, len(a))])


def up_pth_root(F: Field, a):
    """Inverse Frobenius on a polynomial in ``x^p``."""
    p = F.p
    return [F.frobenius(a[i], F.k - 1) if F.kind == "extension" else a[i]
            for i in range(0, len(a), p)]


def up_radical(F: Field, a):
    """Product of the distinct monic irreducible factors of ``a`` (perfect ``F``)."""
    a = up_monic(F, up_trim(list(a)))
    if len(a) <= 1:
        return [F.one] if a else []
    da = up_deriv(F, a)
    if not da:
        return up_radical(F, up_pth_root(F, a))
    g = up_gcd(F, a, da)
    h = up_divmod(F, a, g)[0]
    if len(g) == 1:
        return up_monic(F, h)
    rg = up_radical(F, g)
    # lcm(h, rad g)
    return up_monic(F, up_divmod(F, up_mul(F, h, rg), up_gcd(F, h, rg))[0])
