#pragma once

// Exact arithmetic over squarefree products of primes. A set of primes is
// encoded as their product: 1 is the empty set, gcd is intersection, lcm is
// union and divisibility is inclusion.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "primeclique/errors.hpp"

namespace primeclique {

using Natural = boost::multiprecision::cpp_int;

// Deterministic trial division; used to validate Prime values.
constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

class Prime {
 public:
  explicit Prime(std::uint64_t value) : value_(value) {
    if (!is_prime(value)) {
      throw ContractViolation("not a prime: " + std::to_string(value));
    }
  }

  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  struct Unchecked {};
  Prime(std::uint64_t value, Unchecked) noexcept : value_(value) {}

  friend std::vector<Prime> first_n_primes(std::size_t n);

  std::uint64_t value_;
};

inline std::ostream& operator<<(std::ostream& os, Prime p) {
  return os << p.value();
}

class SquarefreeProduct {
 public:
  SquarefreeProduct() : value_(1) {}

  explicit SquarefreeProduct(Natural value) : value_(std::move(value)) {
    if (value_ < 1) {
      throw ContractViolation("squarefree product must be >= 1");
    }
  }

  explicit SquarefreeProduct(Prime p) : value_(p.value()) {}

  const Natural& value() const noexcept { return value_; }

  bool is_one() const { return value_ == 1; }

  std::size_t bit_length() const {
    return static_cast<std::size_t>(boost::multiprecision::msb(value_)) + 1;
  }

  std::string str() const { return value_.str(); }

  friend bool operator==(const SquarefreeProduct& a,
                         const SquarefreeProduct& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const SquarefreeProduct& a,
                                          const SquarefreeProduct& b) {
    const int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Natural value_;
};

inline std::ostream& operator<<(std::ostream& os, const SquarefreeProduct& x) {
  return os << x.value();
}

// Upper limit for first_n_primes; the sieve for this many primes is ~16M
// entries.
inline constexpr std::size_t kMaxPrimeCount = 1'000'000;

// The first n primes in ascending order, via a sieve of Eratosthenes sized
// from the Rosser bound p_n < n (ln n + ln ln n) for n >= 6.
inline std::vector<Prime> first_n_primes(std::size_t n) {
  if (n > kMaxPrimeCount) {
    throw ContractViolation("first_n_primes: n exceeds limit of " +
                            std::to_string(kMaxPrimeCount));
  }
  std::vector<Prime> primes;
  if (n == 0) return primes;
  primes.reserve(n);

  std::size_t limit = 15;
  if (n >= 6) {
    const double x = static_cast<double>(n);
    limit = static_cast<std::size_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
  }
  std::vector<bool> composite(limit + 1, false);
  for (std::size_t i = 2; i <= limit && primes.size() < n; ++i) {
    if (composite[i]) continue;
    primes.push_back(Prime(i, Prime::Unchecked{}));
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  assert(primes.size() == n);
  return primes;
}

inline bool divides(const SquarefreeProduct& d, const SquarefreeProduct& x) {
  return x.value() % d.value() == 0;
}

inline bool divides(Prime d, const SquarefreeProduct& x) {
  return x.value() % d.value() == 0;
}

inline SquarefreeProduct gcd(const SquarefreeProduct& x,
                             const SquarefreeProduct& y) {
  return SquarefreeProduct(boost::multiprecision::gcd(x.value(), y.value()));
}

// lcm: the set union of the two prime sets.
inline SquarefreeProduct union_product(const SquarefreeProduct& x,
                                       const SquarefreeProduct& y) {
  return SquarefreeProduct(boost::multiprecision::lcm(x.value(), y.value()));
}

inline SquarefreeProduct exact_divide(const SquarefreeProduct& x,
                                      const SquarefreeProduct& d) {
  Natural q;
  Natural r;
  boost::multiprecision::divide_qr(x.value(), d.value(), q, r);
  if (r != 0) {
    throw ContractViolation("exact_divide: " + d.str() + " does not divide " +
                            x.str());
  }
  return SquarefreeProduct(std::move(q));
}

// Product of pairwise coprime factors (a disjoint union of prime sets).
inline SquarefreeProduct multiply(std::span<const SquarefreeProduct> factors) {
  Natural acc = 1;
  for (const auto& f : factors) {
    if (boost::multiprecision::gcd(acc, f.value()) != 1) {
      throw ContractViolation("multiply: factor " + f.str() +
                              " shares a prime with the other factors");
    }
    acc *= f.value();
  }
  return SquarefreeProduct(std::move(acc));
}

inline SquarefreeProduct multiply(
    std::initializer_list<SquarefreeProduct> factors) {
  return multiply(std::span<const SquarefreeProduct>(factors.begin(),
                                                     factors.size()));
}

// Indices i (ascending) with basis[i] | x. Throws IntegrityError when a
// residue other than 1 remains, i.e. x has a divisor outside the basis or a
// repeated prime.
inline std::vector<std::size_t> factor_over_basis(const SquarefreeProduct& x,
                                                  std::span<const Prime> basis) {
  std::vector<std::size_t> indices;
  Natural residue = x.value();
  for (std::size_t i = 0; i < basis.size() && residue != 1; ++i) {
    const std::uint64_t p = basis[i].value();
    if (residue % p == 0) {
      residue /= p;
      indices.push_back(i);
    }
  }
  if (residue != 1) {
    throw IntegrityError("factor_over_basis: residue " + residue.str() +
                         " != 1 after dividing out basis primes of " + x.str());
  }
  return indices;
}

}  // namespace primeclique
