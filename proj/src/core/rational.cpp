#include "growthlab/core/rational.hpp"

#include <charconv>
#include <numeric>

namespace growthlab {

namespace {

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t out = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return out;
}

}  // namespace

Ratio Ratio::normalized() const {
  if (num == 0) return {0, 1};
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

std::int64_t Ratio::scale_floor(std::int64_t value) const {
  __extension__ using i128 = __int128;
  const auto wide = static_cast<i128>(value) * num;
  auto q = wide / den;
  if (wide % den != 0 && (wide < 0) != (den < 0)) --q;
  return static_cast<std::int64_t>(q);
}

std::optional<Ratio> Ratio::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto n = parse_int(text.substr(0, slash));
    const auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d <= 0 || *n < 0) return std::nullopt;
    return Ratio{*n, *d}.normalized();
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9) return std::nullopt;
    const auto w = whole.empty() ? std::optional<std::int64_t>{0} : parse_int(whole);
    const auto f = parse_int(frac);
    if (!w || !f || *w < 0 || *f < 0) return std::nullopt;
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Ratio{*w * den + *f, den}.normalized();
  }
  const auto n = parse_int(text);
  if (!n || *n < 0) return std::nullopt;
  return Ratio{*n, 1};
}

std::string Ratio::to_string() const {
  const auto r = normalized();
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace growthlab
