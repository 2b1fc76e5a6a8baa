#!/usr/bin/env python3
"""Independent recomputation of the desk-scale reference vectors.

Plain integer arithmetic only (no shared code with the C++ library). The
values printed here are frozen into the C++ tests.
"""
import hashlib


def sqmul(base, exp, mod):
    result, base = 1, base % mod
    while exp:
        if exp & 1:
            result = result * base % mod
        base = base * base % mod
        exp >>= 1
    return result


def egcd_inv(x, mod):
    old_r, r, old_s, s = x % mod, mod, 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return None if old_r != 1 else old_s % mod


def trial_prime(x):
    return x >= 2 and all(x % d for d in range(2, int(x ** 0.5) + 1))


P0, P1, Q1 = 1013, 11, 23
N = P1 * Q1
G2 = 122

print("modmath")
print("  3^92 mod 1013 =", sqmul(3, 92, P0))
print("  2^92 mod 1013 =", sqmul(2, 92, P0))
print("  122^11 mod 1013 =", sqmul(122, 11, P0))
print("  2^20 mod 61 =", sqmul(2, 20, 61), " 47^3 mod 61 =", sqmul(47, 3, 61))
print("  inv(10, 253) =", egcd_inv(10, N), " inv(11, 253) =", egcd_inv(11, N))
print("  1013 prime:", trial_prime(P0), " 4*5*7+1 =", 4 * 35 + 1, trial_prime(141))
print("  order-11 elements mod 1013:",
      sum(1 for h in range(2, P0) if sqmul(h, 11, P0) == 1))
print("  122^2 mod 1013 =", sqmul(G2, 2, P0))

# Worked handshake + signing vector.
x0, k, b_prime, s, c, e, m = 2, 1, 1, 3, 2, 1, 10
y0 = sqmul(G2, x0, P0)
r1 = sqmul(G2, k, P0)
b = sqmul(G2, b_prime, P0)
r3 = sqmul(r1, b, P0)
rho3 = r3 % N
r2 = rho3 * egcd_inv(b % N, N) % N
a = (x0 * r2 + k * s) % N
lhs = sqmul(G2, b * a % N, P0)
rhs = sqmul(y0, rho3, P0) * sqmul(r3, s, P0) % P0
print("handshake y0=%d r1=%d b=%d r3=%d rho3=%d r2=%d a=%d check=%d/%d ba mod n=%d"
      % (y0, r1, b, r3, rho3, r2, a, lhs, rhs, b * a % N))
a_bad = (a + 1) % N
print("  tampered a: lhs=%d rhs=%d" % (sqmul(G2, b * a_bad % N, P0), rhs))

r5 = sqmul(G2, c, P0)
E = sqmul(G2, e, P0)
r4 = r3 * r5 % P0
for mode in ("repaired", "literal"):
    mu = (r4 % N) * egcd_inv(rho3, N) % N if mode == "repaired" else r5 % N
    s1 = mu * s % N
    r6 = (b * a + c * s) * mu % N
    s2 = (m + r6 - c * E) * egcd_inv(e, N) % N
    eq25 = sqmul(G2, r6, P0) == sqmul(y0, r4 % N, P0) * sqmul(r4, s1, P0) % P0
    eq26 = sqmul(G2, (m + r6) % N, P0) == sqmul(G2, c * E % N, P0) * sqmul(E, s2, P0) % P0
    print("%s: mu=%d sig={m=%d c=%d E=%d r4=%d r6=%d s1=%d s2=%d} eq25=%s eq26=%s"
          % (mode, mu, m, c, E, r4, r6, s1, s2, eq25, eq26))

print("gcd(166-122, 253) =", __import__("math").gcd(44, N))
digest = hashlib.sha256(b"").digest()
print("sha256('') mod 253 =", int.from_bytes(digest, "big") % N)
print("sha256('abc') mod 253 =", int.from_bytes(hashlib.sha256(b"abc").digest(), "big") % N)
