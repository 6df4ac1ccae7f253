"""Independent oracles used by the differential tests.

Everything here is deliberately naive: plain-integer arithmetic, schoolbook
polynomial multiplication, affine curve formulas, and a textbook divisor
Miller loop.  None of it shares code paths with the library under test.
"""

from __future__ import annotations

from bnpair import fp, tower

# ---------------------------------------------------------------------------
# Montgomery oracle
# ---------------------------------------------------------------------------

R = 1 << 256


def mont_mul_oracle(a: int, b: int, p: int) -> int:
    """a * b * R^-1 mod p by direct wide-integer arithmetic."""
    return a * b * pow(R, -1, p) % p


# ---------------------------------------------------------------------------
# Schoolbook field oracles (plain, non-Montgomery integers)
# ---------------------------------------------------------------------------


def fp2o_mul(a, b, p, beta):
    """(a0 + a1 mu)(b0 + b1 mu) by the 4-multiplication schoolbook formula."""
    a0, a1 = a
    b0, b1 = b
    return ((a0 * b0 + beta * a1 * b1) % p, (a0 * b1 + a1 * b0) % p)


def fp2o_add(a, b, p):
    return ((a[0] + b[0]) % p, (a[1] + b[1]) % p)


def fp2o_scale(a, k, p):
    return (a[0] * k % p, a[1] * k % p)


def fp6o_mul(a, b, p, beta, xi):
    """Schoolbook degree-3 polynomial product mod nu^3 - xi over F_{p^2}.

    a, b are triples of F_{p^2} pairs.
    """
    prod = [(0, 0)] * 5
    for i in range(3):
        for j in range(3):
            prod[i + j] = fp2o_add(prod[i + j], fp2o_mul(a[i], b[j], p, beta), p)
    for k in (4, 3):
        folded = fp2o_mul(prod[k], xi, p, beta)
        prod[k - 3] = fp2o_add(prod[k - 3], folded, p)
    return tuple(prod[:3])


def fp12o_mul(a, b, p, beta, xi):
    """Schoolbook degree-6 product mod W^6 - xi over F_{p^2}.

    a, b are 6-element lists of F_{p^2} pairs in the flattened W-basis.
    """
    prod = [(0, 0)] * 11
    for i in range(6):
        for j in range(6):
            prod[i + j] = fp2o_add(prod[i + j], fp2o_mul(a[i], b[j], p, beta), p)
    for k in range(10, 5, -1):
        folded = fp2o_mul(prod[k], xi, p, beta)
        prod[k - 6] = fp2o_add(prod[k - 6], folded, p)
    return prod[:6]


# ---------------------------------------------------------------------------
# Conversions between library values and oracle representations
# ---------------------------------------------------------------------------


def fp2_out(a, par):
    return tower.fp2_to_ints(a, par)


def fp2_in(a, par):
    return tower.fp2_from_ints(a[0], a[1], par)


def fp6_out(a, par):
    return tuple(fp2_out(c, par) for c in a)


def fp6_in(a, par):
    return tuple(fp2_in(c, par) for c in a)


def fp12_out(a, par):
    """Library Fp12 -> flattened 6-coefficient W-basis, plain ints."""
    return [fp2_out(z, par) for z in tower.fp12_to_coeffs(a)]


def fp12_in(coeffs, par):
    return tower.fp12_from_coeffs([fp2_in(c, par) for c in coeffs])


def xi_pair(par):
    return (par.xi[0] % par.p, par.xi[1] % par.p)


# ---------------------------------------------------------------------------
# Naive pairing oracle (direct divisor evaluation over F_{p^12})
# ---------------------------------------------------------------------------


def untwist(aff, par):
    """Affine twist point -> affine E(F_{p^12}) point: (x W^2, y W^3)."""
    x, y = aff
    z = tower.fp2_zero(par)
    xh = ((z, x, z), (z, z, z))
    yh = ((z, z, z), (z, y, z))
    return (xh, yh)


def embed_g1(P, par):
    z = tower.fp2_zero(par)
    xv = (((P.x, 0), z, z), (z, z, z))
    yv = (((P.y, 0), z, z), (z, z, z))
    return (xv, yv)


def _sub12(a, b, par):
    return (tower.fp6_sub(a[0], b[0], par), tower.fp6_sub(a[1], b[1], par))


def _slope(A, B, par):
    (x1, y1), (x2, y2) = A, B
    if x1 == x2:
        three = tower.fp12_mul_fp2(tower.fp12_one(par), tower.fp2_from_ints(3, 0, par), par)
        num = tower.fp12_mul(three, tower.fp12_mul(x1, x1, par), par)
        return tower.fp12_mul(num, tower.fp12_inv(tower.fp12_add(y1, y1, par), par), par)
    return tower.fp12_mul(
        _sub12(y2, y1, par), tower.fp12_inv(_sub12(x2, x1, par), par), par
    )


def ec12_add(A, B, par):
    """Affine addition on E(F_{p^12}); None is the point at infinity."""
    if A is None:
        return B
    if B is None:
        return A
    (x1, y1), (x2, y2) = A, B
    if x1 == x2 and tower.fp12_is_zero(tower.fp12_add(y1, y2, par)):
        return None
    lam = _slope(A, B, par)
    x3 = _sub12(_sub12(tower.fp12_mul(lam, lam, par), x1, par), x2, par)
    y3 = _sub12(tower.fp12_mul(lam, _sub12(x1, x3, par), par), y1, par)
    return (x3, y3)


def line_eval(A, B, S, par):
    """The line through A and B (tangent if A = B) evaluated at S."""
    xs, ys = S
    if A is None or B is None:
        V = A if A is not None else B
        if V is None:
            return tower.fp12_one(par)
        return _sub12(xs, V[0], par)
    (x1, y1), (x2, y2) = A, B
    if x1 == x2 and y1 != y2:
        return _sub12(xs, x1, par)
    lam = _slope(A, B, par)
    return _sub12(_sub12(ys, y1, par), tower.fp12_mul(lam, _sub12(xs, x1, par), par), par)


def miller_naive(n, Q, S, par):
    """Textbook Miller function f_{n,Q}(S): double-and-add with explicit
    vertical-line divisions.  Returns (f, [n]Q)."""
    f = tower.fp12_one(par)
    T = Q
    for bit in bin(n)[3:]:
        f = tower.fp12_mul(tower.fp12_sqr(f, par), line_eval(T, T, S, par), par)
        T = ec12_add(T, T, par)
        if T is not None:
            f = tower.fp12_mul(f, tower.fp12_inv(_sub12(S[0], T[0], par), par), par)
        if bit == "1":
            f = tower.fp12_mul(f, line_eval(T, Q, S, par), par)
            T = ec12_add(T, Q, par)
            if T is not None:
                f = tower.fp12_mul(f, tower.fp12_inv(_sub12(S[0], T[0], par), par), par)
    return f, T


def optimal_ate_naive(P, Q_aff, par):
    """Full optimal Ate pairing by direct divisor evaluation: f_{s,Q} plus
    the two correction lines, then a generic big-exponent final power."""
    from bnpair import curve

    S = embed_g1(P, par)
    Qh = untwist(Q_aff, par)
    f, T = miller_naive(par.s, Qh, S, par)
    piQ = untwist(curve.g2_frobenius_psi(Q_aff, par, 1), par)
    pi2Q = untwist(curve.g2_frobenius_psi(Q_aff, par, 2), par)
    npi2Q = (pi2Q[0], (tower.fp6_neg(pi2Q[1][0], par), tower.fp6_neg(pi2Q[1][1], par)))
    f = tower.fp12_mul(f, line_eval(T, piQ, S, par), par)
    T = ec12_add(T, piQ, par)
    f = tower.fp12_mul(f, line_eval(T, npi2Q, S, par), par)
    return tower.fp12_pow(f, (par.p**12 - 1) // par.r, par)


# ---------------------------------------------------------------------------
# Brute-force tiny-curve group tables
# ---------------------------------------------------------------------------


def enumerate_e_fp(par):
    """All affine points of E(F_p) by exhaustive scan (tiny curves only)."""
    p, b = par.p, par.b
    squares = {}
    for y in range(p):
        squares.setdefault(y * y % p, []).append(y)
    points = []
    for x in range(p):
        for y in squares.get((x**3 + b) % p, []):
            points.append((x, y))
    return points


def enumerate_twist_fp2(par):
    """All affine points of the twist over F_{p^2} by exhaustive scan."""
    p = par.p
    bt = tower.fp2_to_ints(par.b_twist, par)
    beta = par.beta % p

    def mul2(a, b):
        return fp2o_mul(a, b, p, beta)

    points = []
    sq = {}
    for y0 in range(p):
        for y1 in range(p):
            sq.setdefault(mul2((y0, y1), (y0, y1)), []).append((y0, y1))
    for x0 in range(p):
        for x1 in range(p):
            x = (x0, x1)
            rhs = fp2o_add(mul2(mul2(x, x), x), bt, p)
            for y in sq.get(rhs, []):
                points.append((x, y))
    return points
