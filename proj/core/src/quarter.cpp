#include "shockcast/quarter.hpp"

#include <cctype>
#include <charconv>

#include "shockcast/errors.hpp"

namespace shockcast {

Quarter::Quarter(int year, int q) : year_(year), q_(q) {
  if (q < 1 || q > 4) {
    throw DomainError("quarter index must be in 1..4, got " + std::to_string(q));
  }
}

Quarter Quarter::from_index(std::int64_t index) {
  // index = 4*year + q with q in 1..4, so shift by one before dividing.
  std::int64_t shifted = index - 1;
  std::int64_t year = shifted >= 0 ? shifted / 4 : -((-shifted + 3) / 4);
  int q = static_cast<int>(shifted - 4 * year) + 1;
  return Quarter(static_cast<int>(year), q);
}

std::string Quarter::to_string() const {
  return std::to_string(year_) + " Q" + std::to_string(q_);
}

std::string Quarter::to_compact_string() const {
  return std::to_string(year_) + "Q" + std::to_string(q_);
}

Quarter Quarter::parse(std::string_view text) {
  auto fail = [&]() -> Quarter {
    throw DomainError("malformed quarter label '" + std::string(text) +
                      "' (expected e.g. \"2020 Q1\")");
  };
  if (text.size() < 6) return fail();
  std::size_t digits = 0;
  while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;
  if (digits != 4) return fail();
  int year = 0;
  std::from_chars(text.data(), text.data() + digits, year);
  std::string_view rest = text.substr(digits);
  if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (rest.size() != 2 || rest[0] != 'Q' || rest[1] < '1' || rest[1] > '4') return fail();
  return Quarter(year, rest[1] - '0');
}

}  // namespace shockcast
