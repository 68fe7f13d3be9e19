#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace shockcast {

// A calendar quarter. Ordering follows the linear index 4*year + q.
class Quarter {
 public:
  // Throws DomainError unless q is in 1..4.
  Quarter(int year, int q);

  int year() const noexcept { return year_; }
  int q() const noexcept { return q_; }

  std::int64_t index() const noexcept { return 4 * static_cast<std::int64_t>(year_) + q_; }
  static Quarter from_index(std::int64_t index);

  Quarter next() const { return *this + 1; }
  Quarter prev() const { return *this - 1; }

  friend Quarter operator+(Quarter a, std::int64_t n) { return from_index(a.index() + n); }
  friend Quarter operator-(Quarter a, std::int64_t n) { return from_index(a.index() - n); }
  // Number of quarters from b to a.
  friend std::int64_t operator-(Quarter a, Quarter b) { return a.index() - b.index(); }

  friend bool operator==(const Quarter&, const Quarter&) = default;
  friend std::strong_ordering operator<=>(const Quarter& a, const Quarter& b) {
    return a.index() <=> b.index();
  }

  // "2020 Q1"
  std::string to_string() const;
  // "2020Q1"
  std::string to_compact_string() const;

  // Accepts "2020 Q1" and "2020Q1". Throws DomainError on anything else.
  static Quarter parse(std::string_view text);

 private:
  int year_;
  int q_;
};

}  // namespace shockcast
