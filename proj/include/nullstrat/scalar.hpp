#ifndef NULLSTRAT_SCALAR_HPP
#define NULLSTRAT_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nullstrat {

using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_of(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Field of rational numbers; element type carries all state.
struct QField {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_long(long v) const { return Rat(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("division by zero");
    return a / b;
  }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.get_str(); }
};

// Prime field F_p for word-sized p; elements are canonical residues.
struct PField {
  using Elem = std::uint64_t;
  std::uint64_t p;

  explicit PField(std::uint64_t prime) : p(prime) {
    if (prime < 2) throw std::invalid_argument("modulus must be >= 2");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_long(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return static_cast<Elem>(r);
  }
  Elem from_rat(const Rat& q) const {
    Int num = q.get_num(), den = q.get_den();
    Elem n = from_int(num), d = from_int(den);
    return mul(n, inv(d));
  }
  Elem from_int(const Int& v) const {
    Int r = v % Int(static_cast<unsigned long>(p));
    if (r < 0) r += Int(static_cast<unsigned long>(p));
    return r.get_ui();
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one(), base = a % p;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p - 2);  // p prime
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }
};

// Deterministic primality test, adequate for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t next_prime_u64(std::uint64_t n) {
  while (!is_prime_u64(n)) ++n;
  return n;
}

// FNV-1a, used for input hashes in certificates.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace nullstrat

#endif
