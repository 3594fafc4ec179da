"""Binary-expansion arithmetic mod 2.

Binomial coefficients are reduced mod 2 with Lucas' theorem.  A negative
top argument is read through the generating function (1 + x)^a over F_2,
which is the same as digit containment in the infinite two's-complement
expansion of ``a`` -- Python's ``&`` already behaves that way.
"""


def bits(m: int) -> list[int]:
    """Binary digits of ``m``, least significant first."""
    if m < 0:
        raise ValueError("bits() needs a nonnegative integer")
    out = []
    while m:
        out.append(m & 1)
        m >>= 1
    return out


def binom_mod2(a: int, b: int) -> int:
    """C(a, b) mod 2.

    C(a, 0) = 1 for every integer a, C(a, b) = 0 for b < 0.
    """
    if b < 0:
        return 0
    return 1 if (a & b) == b else 0


def rho(m: int) -> int:
    """Index of the lowest zero bit of ``m``."""
    if m < 0:
        raise ValueError("rho() needs a nonnegative integer")
    low = (m + 1) & -(m + 1)
    return low.bit_length() - 1


def is_power_of_two(m: int) -> bool:
    return m > 0 and m & (m - 1) == 0
