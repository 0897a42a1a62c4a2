#include "fatpoints/hf_core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "fatpoints/errors.hpp"

namespace fatpoints {

namespace {

constexpr std::string_view kBullet = "\xE2\x80\xA2";  // U+2022

std::string index_message(std::string_view what, std::size_t index) {
  std::ostringstream os;
  os << what << " at index " << index;
  return os.str();
}

}  // namespace

DeltaH DeltaH::validate(std::span<const long long> seq) {
  std::size_t n = seq.size();
  while (n > 0 && seq[n - 1] == 0) --n;
  if (n == 0) throw InvalidDelta('0', 0, "empty first difference (no nonzero entry)");

  for (std::size_t i = 0; i < n; ++i) {
    if (seq[i] < 0) throw InvalidDelta('0', i, index_message("negative entry", i));
  }
  if (seq[0] != 1) {
    throw InvalidDelta('a', 0, index_message("condition (a) fails: h_0 must be 1", 0));
  }

  std::size_t alpha = 1;
  while (alpha < n && seq[alpha] == static_cast<long long>(alpha) + 1) ++alpha;

  for (std::size_t i = alpha; i < n; ++i) {
    if (seq[i] > seq[i - 1]) {
      std::ostringstream os;
      if (i == alpha) {
        os << "condition (a) fails at index " << i << ": h_" << i << " = " << seq[i] << ", expected "
           << i + 1 << " (staircase) or at most " << alpha;
        throw InvalidDelta('a', i, os.str());
      }
      os << "condition (b) fails at index " << i << ": h_" << i - 1 << " = " << seq[i - 1]
         << " < h_" << i << " = " << seq[i];
      throw InvalidDelta('b', i, os.str());
    }
    if (seq[i] == 0) {
      throw InvalidDelta('b', i, index_message("condition (b) fails: interior zero", i));
    }
  }

  std::vector<int> values(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(n));
  return DeltaH(std::move(values), static_cast<int>(alpha));
}

int DeltaH::total() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0);
}

HilbertFunction HilbertFunction::from_values(std::span<const long long> values) {
  if (values.empty()) throw NotNondecreasing("empty Hilbert function");
  if (values[0] < 0) throw NotNondecreasing("negative Hilbert function value");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) {
      throw NotNondecreasing(index_message("sequence decreases", i));
    }
  }
  std::size_t n = values.size();
  while (n > 1 && values[n - 2] == values[n - 1]) --n;
  return HilbertFunction(std::vector<long long>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n)));
}

long long HilbertFunction::at(int t) const {
  if (t < 0) return 0;
  if (static_cast<std::size_t>(t) >= values_.size()) return values_.back();
  return values_[static_cast<std::size_t>(t)];
}

ConjugatePartition::ConjugatePartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] >= parts_[i - 1])) {
      throw Error("conjugate partition must be positive and strictly decreasing");
    }
  }
}

int ConjugatePartition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

DeltaH validate_delta(std::span<const long long> seq) { return DeltaH::validate(seq); }

ConjugatePartition conjugate(const DeltaH& d) {
  const auto& h = d.values();
  const int top = *std::max_element(h.begin(), h.end());
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(top));
  for (int level = 1; level <= top; ++level) {
    parts.push_back(static_cast<int>(std::count_if(h.begin(), h.end(), [level](int v) { return v >= level; })));
  }
  return ConjugatePartition(std::move(parts));
}

HilbertFunction accumulate(const DeltaH& d) {
  std::vector<long long> sums;
  sums.reserve(d.size());
  long long running = 0;
  for (int v : d.values()) {
    running += v;
    sums.push_back(running);
  }
  return HilbertFunction::from_values(sums);
}

DeltaH first_difference(const HilbertFunction& h) { return first_difference(std::span<const long long>(h.values())); }

DeltaH first_difference(std::span<const long long> h) {
  std::vector<long long> diff;
  diff.reserve(h.size());
  long long prev = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < prev) throw NotNondecreasing(index_message("Hilbert function decreases", i));
    diff.push_back(h[i] - prev);
    prev = h[i];
  }
  return DeltaH::validate(diff);
}

DegreeSplit degree_split(const DeltaH& d) {
  const int total = d.total();
  return {total, total / 3, total % 3};
}

DeltaH star_delta(int t) {
  if (t < 1) throw Error("star_delta needs t >= 1");
  std::vector<long long> v;
  for (int i = 1; i <= t; ++i) v.push_back(i);
  for (int i = 0; i < t; ++i) v.push_back(t + 1);
  return DeltaH::validate(v);
}

DeltaH star_plus_point_delta(int t) {
  if (t < 1) throw Error("star_plus_point_delta needs t >= 1");
  auto base = star_delta(t).values();
  std::vector<long long> v(base.begin(), base.end());
  v.push_back(1);
  return DeltaH::validate(v);
}

DeltaH star_bullet_atop_delta(int t) {
  if (t < 2) throw Error("star_bullet_atop_delta needs t >= 2");
  auto base = star_delta(t).values();
  std::vector<long long> v(base.begin(), base.end());
  v[static_cast<std::size_t>(t) + 1] += 1;
  return DeltaH::validate(v);
}

DeltaH generic_double_delta(int t) {
  if (t < 1) throw Error("generic_double_delta needs t >= 1");
  if (t == 2 || t == 5) {
    throw ExceptionalT("t = " + std::to_string(t) +
                       " is an exceptional case; the min{C(i+2,2), 3t} formula does not apply");
  }
  const long long degree = 3LL * t;
  std::vector<long long> h;
  for (long long i = 0;; ++i) {
    h.push_back(std::min(binomial(i + 2, 2), degree));
    if (h.back() == degree) break;
  }
  return first_difference(h);
}

std::string render_dot_diagram(const DeltaH& d) {
  const auto& h = d.values();
  const int top = *std::max_element(h.begin(), h.end());
  std::string out;
  for (int level = top; level >= 1; --level) {
    std::string row;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (i > 0) row += ' ';
      if (h[i] >= level) {
        row += kBullet;
      } else {
        row += ' ';
      }
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

std::vector<long long> parse_integer_list(std::string_view text) {
  std::vector<long long> out;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty integer list");
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("not an integer: '" + std::string(item) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::string format_integer_list(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_integer_list(std::span<const long long> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace fatpoints
