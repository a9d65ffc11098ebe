#pragma once

// Exact rational scalar: reduced fraction with positive denominator.
// Intermediates run through 128 bits; anything that cannot be reduced back
// into 64 bits throws instead of silently losing exactness.

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace steinhaus {

class Rat {
 public:
  Rat() = default;
  Rat(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rat(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(-num_, den_); }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rat& o) const;

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }

  // "7", "-3/4"; denominator 1 is omitted when printing.
  static Rat parse(std::string_view text);
  std::string str() const;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

struct RatPoint {
  Rat x, y;
  bool operator==(const RatPoint&) const = default;
};

struct RatHash {
  std::size_t operator()(const Rat& r) const {
    return std::hash<long long>()(r.num()) * 1000003u ^
           std::hash<long long>()(r.den());
  }
};

struct RatPointHash {
  std::size_t operator()(const RatPoint& p) const {
    return RatHash()(p.x) * 2654435761u ^ RatHash()(p.y);
  }
};

}  // namespace steinhaus
