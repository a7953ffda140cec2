"""Pure-Python kernels.  Same interface and results as the compiled ``_kernels``.

Inputs are plain ints already validated to magnitude < 2**62.
"""

import numpy as np

NAME = "python"

# index = (e - k) % 4 where the subtrahend is 2**k * i**e (times 1+i for odd n)
_DIGIT_CHARS = "1inm"


def snowflake_index(x):
    """Closed form of the least m with x <= w(m) - 2, for x >= 1."""
    x2 = x + 2
    p = x2.bit_length() - 1
    if p == 1:
        return 0
    top = 1 << p
    if x2 == top:
        return 2 * p - 3
    if x2 <= top + (top >> 1):
        return 2 * p - 2
    return 2 * p - 1


def phi_ab(re, im):
    """phi(re + im*i) via shifts and bit lengths; -1 encodes the zero input."""
    a = re if re >= 0 else -re
    b = im if im >= 0 else -im
    if a < b:
        a, b = b, a
    if a == 0:
        return -1
    t = a | b
    j = (t & -t).bit_length() - 1
    x = a >> j
    m = snowflake_index(x)
    n = m + 1
    k = n >> 1
    w_next = (4 << k) if n & 1 else (3 << k)
    if x + (b >> j) + 3 <= w_next:
        return m + 2 * j
    return m + 2 * j + 1


def phi_batch(re, im):
    re = np.asarray(re, dtype=np.int64)
    im = np.asarray(im, dtype=np.int64)
    out = np.empty(re.shape[0], dtype=np.int64)
    for idx, (a, b) in enumerate(zip(re.tolist(), im.tolist())):
        out[idx] = phi_ab(a, b)
    return out


def leading_term_ab(re, im, n):
    """Subtrahend (sr, si) and digit char for level ``n = phi(re+im*i)``.

    Branches are tried in the fixed order even: |b|<=a, |b|<=-a, |a|<=-b,
    |a|<=b; odd: a,b>=0; a,b<=0; a>=0,b<=0; a<=0,b>=0.
    """
    k = n >> 1
    s = 1 << k
    if n & 1:
        if re >= 0 and im >= 0:
            e = 0
        elif re <= 0 and im <= 0:
            e = 2
        elif re >= 0:
            e = 3
        else:
            e = 1
        # 2**k * i**e * (1+i)
        sr, si = ((s, s), (-s, s), (-s, -s), (s, -s))[e]
    else:
        abs_re = re if re >= 0 else -re
        abs_im = im if im >= 0 else -im
        if abs_im <= re:
            e = 0
        elif abs_im <= -re:
            e = 2
        elif abs_re <= -im:
            e = 3
        else:
            e = 1
        sr, si = ((s, 0), (0, s), (-s, 0), (0, -s))[e]
    return sr, si, _DIGIT_CHARS[(e - k) & 3]


def expand_text(re, im):
    """Minimal (1+i)-ary digit string, most significant first."""
    n = phi_ab(re, im)
    if n < 0:
        return "0"
    digits = ["0"] * (n + 1)
    level = n
    while True:
        sr, si, ch = leading_term_ab(re, im, level)
        digits[n - level] = ch
        re -= sr
        im -= si
        if re == 0 and im == 0:
            return "".join(digits)
        nxt = phi_ab(re, im)
        if nxt >= level:
            raise AssertionError(f"phi did not descend below {level} (got {nxt})")
        level = nxt
