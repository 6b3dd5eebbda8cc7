#include "selberg/weight.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "selberg/error.hpp"

namespace selberg {

Weight::Weight(std::vector<int> doubled) : doubled_(std::move(doubled)) {
  if (doubled_.empty()) return;
  const bool odd = (doubled_.front() % 2) != 0;
  for (int d : doubled_) {
    if (((d % 2) != 0) != odd) {
      fail(ErrorKind::domain, "weight entries mix integral and half-integral values");
    }
  }
  parity_ = odd ? Parity::half_integral : Parity::integral;
}

Weight Weight::from_doubled(std::vector<int> doubled) { return Weight(std::move(doubled)); }

Weight Weight::from_doubled(std::vector<int> doubled, Parity expected) {
  Weight w(std::move(doubled));
  if (w.parity_ != expected && w.rank() > 0) fail(ErrorKind::domain, "weight parity tag does not match entries");
  return w;
}

Weight Weight::integral(std::vector<int> entries) {
  for (int& e : entries) e *= 2;
  return Weight(std::move(entries));
}

Weight Weight::zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

Weight Weight::half_ones(std::size_t rank) { return Weight(std::vector<int>(rank, 1)); }

Weight Weight::parse(std::string_view text) {
  std::vector<int> doubled;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const Rational r = parse_rational(piece);
    const Rational twice = r * 2;
    if (twice.get_den() != 1) fail(ErrorKind::parse, "weight entry '" + std::string(piece) + "' is not a half-integer");
    if (!twice.get_num().fits_sint_p()) fail(ErrorKind::parse, "weight entry out of range");
    doubled.push_back(static_cast<int>(twice.get_num().get_si()));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (doubled.empty()) fail(ErrorKind::parse, "empty weight");
  return Weight(std::move(doubled));
}

bool Weight::is_zero() const noexcept {
  return std::all_of(doubled_.begin(), doubled_.end(), [](int d) { return d == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  if (rank() != o.rank()) fail(ErrorKind::dimension, "weight rank mismatch");
  std::vector<int> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = doubled_[i] + o.doubled_[i];
  return Weight(std::move(out));
}

Weight Weight::operator-(const Weight& o) const {
  if (rank() != o.rank()) fail(ErrorKind::dimension, "weight rank mismatch");
  std::vector<int> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = doubled_[i] - o.doubled_[i];
  return Weight(std::move(out));
}

Weight Weight::operator-() const {
  std::vector<int> out(doubled_);
  for (int& d : out) d = -d;
  return Weight(std::move(out));
}

Weight Weight::scaled(int factor) const {
  std::vector<int> out(doubled_);
  for (int& d : out) d *= factor;
  return Weight(std::move(out));
}

long long Weight::inner4(const Weight& o) const {
  if (rank() != o.rank()) fail(ErrorKind::dimension, "weight rank mismatch");
  long long acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) acc += static_cast<long long>(doubled_[i]) * o.doubled_[i];
  return acc;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) os << ',';
    const int d = doubled_[i];
    if (d % 2 == 0) os << d / 2;
    else os << d << "/2";
  }
  os << ')';
  return os.str();
}

Weight weyl_flip(const Weight& w) {
  if (w.rank() == 0) return w;
  std::vector<int> d(w.doubled().begin(), w.doubled().end());
  d.back() = -d.back();
  return Weight::from_doubled(std::move(d));
}

}  // namespace selberg
