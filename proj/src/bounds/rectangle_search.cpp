#include "exmatch/bounds/rectangle_search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "exmatch/core/errors.hpp"
#include "exmatch/core/rng.hpp"

namespace exmatch {

std::optional<Rational> rectangle_value(const WeightMatrix& w, const Rectangle& r) {
  Rational sum = 0;
  for (std::size_t i : r.rows) {
    for (std::size_t j : r.cols) {
      const Weight& x = w.at(i, j);
      if (x.is_forbidden()) return std::nullopt;
      sum += x.value();
    }
  }
  return sum;
}

namespace {

// The search runs on `side` lines (the smaller dimension) against `other`
// lines; `transposed` records whether side lines are columns of W.
template <class T>
class Searcher {
 public:
  Searcher(std::vector<std::vector<T>> a, std::vector<std::vector<char>> forb, bool transposed)
      : a_(std::move(a)), forb_(std::move(forb)), transposed_(transposed),
        side_(a_.size()), other_(side_ ? a_[0].size() : 0) {}

  struct Best {
    T value{};
    Rectangle rect;
  };

  Best exhaustive(unsigned threads) const {
    const std::size_t high_bits = threads <= 1 ? 0 : std::min<std::size_t>(side_, std::bit_width(threads) + 2);
    const std::size_t low_bits = side_ - high_bits;
    const std::size_t chunks = std::size_t{1} << high_bits;
    std::vector<Best> results(chunks);
    auto work = [&](std::size_t begin, std::size_t step) {
      for (std::size_t c = begin; c < chunks; c += step) results[c] = chunk(c << low_bits, low_bits);
    };
    if (threads <= 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
      for (auto& th : pool) th.join();
    }
    Best best;
    for (auto& r : results) consider(best, r.value, r.rect);
    return best;
  }

  Best local_search(std::size_t restarts, std::uint64_t seed) const {
    Best best;
    std::vector<std::vector<char>> starts;
    starts.emplace_back(side_, 0);
    for (std::size_t i = 0; i < side_; ++i) {
      starts.emplace_back(side_, 0);
      starts.back()[i] = 1;
    }
    Rng rng(seed);
    for (std::size_t r = 0; r < restarts; ++r) {
      std::vector<char> s(side_);
      for (auto& b : s) b = static_cast<char>(rng.below(2));
      starts.push_back(std::move(s));
    }
    for (auto& s : starts) {
      climb(s);
      const T v = evaluate(s);
      consider(best, v, make_rect(s));
    }
    return best;
  }

 private:
  void consider(Best& best, const T& v, const Rectangle& r) const {
    if (v > best.value || (v == best.value && v > T{} && (best.rect.empty() || r < best.rect))) {
      best.value = v;
      best.rect = r;
    }
  }

  Best chunk(std::size_t base, std::size_t low_bits) const {
    std::vector<T> sum(other_, T{});
    std::vector<int> fcount(other_, 0);
    std::vector<char> in(side_, 0);
    for (std::size_t i = low_bits; i < side_; ++i) {
      if ((base >> i) & 1u) toggle(i, in, sum, fcount);
    }
    Best best;
    const std::size_t steps = std::size_t{1} << low_bits;
    for (std::size_t step = 0; step < steps; ++step) {
      if (step > 0) toggle(static_cast<std::size_t>(std::countr_zero(step)), in, sum, fcount);
      T v{};
      for (std::size_t j = 0; j < other_; ++j)
        if (fcount[j] == 0 && sum[j] > T{}) v += sum[j];
      if (v > best.value || (v == best.value && v > T{})) consider(best, v, make_rect(in));
    }
    return best;
  }

  void toggle(std::size_t i, std::vector<char>& in, std::vector<T>& sum, std::vector<int>& fcount) const {
    const int d = in[i] ? -1 : 1;
    in[i] = !in[i];
    for (std::size_t j = 0; j < other_; ++j) {
      if (forb_[i][j]) {
        fcount[j] += d;
      } else if (d > 0) {
        sum[j] += a_[i][j];
      } else {
        sum[j] -= a_[i][j];
      }
    }
  }

  T evaluate(const std::vector<char>& in) const {
    T v{};
    for (std::size_t j = 0; j < other_; ++j) {
      T s{};
      bool bad = false;
      for (std::size_t i = 0; i < side_ && !bad; ++i) {
        if (!in[i]) continue;
        if (forb_[i][j]) bad = true;
        else s += a_[i][j];
      }
      if (!bad && s > T{}) v += s;
    }
    return v;
  }

  void climb(std::vector<char>& in) const {
    T cur = evaluate(in);
    for (;;) {
      std::size_t best_i = side_;
      T best_v = cur;
      for (std::size_t i = 0; i < side_; ++i) {
        in[i] = !in[i];
        const T v = evaluate(in);
        in[i] = !in[i];
        if (v > best_v) {
          best_v = v;
          best_i = i;
        }
      }
      if (best_i == side_) return;
      in[best_i] = !in[best_i];
      cur = best_v;
    }
  }

  Rectangle make_rect(const std::vector<char>& in) const {
    std::vector<std::size_t> side_set, other_set;
    for (std::size_t i = 0; i < side_; ++i)
      if (in[i]) side_set.push_back(i);
    if (!side_set.empty()) {
      for (std::size_t j = 0; j < other_; ++j) {
        T s{};
        bool bad = false;
        for (std::size_t i : side_set) {
          if (forb_[i][j]) {
            bad = true;
            break;
          }
          s += a_[i][j];
        }
        if (!bad && s > T{}) other_set.push_back(j);
      }
    }
    if (other_set.empty()) return {};
    return transposed_ ? Rectangle{other_set, side_set} : Rectangle{side_set, other_set};
  }

  std::vector<std::vector<T>> a_;
  std::vector<std::vector<char>> forb_;
  bool transposed_;
  std::size_t side_, other_;
};

struct Oriented {
  bool transposed = false;
  std::vector<std::vector<Rational>> a;
  std::vector<std::vector<char>> forb;
};

Oriented orient(const WeightMatrix& w) {
  Oriented o;
  o.transposed = w.cols() < w.rows();
  const std::size_t side = o.transposed ? w.cols() : w.rows();
  const std::size_t other = o.transposed ? w.rows() : w.cols();
  o.a.assign(side, std::vector<Rational>(other));
  o.forb.assign(side, std::vector<char>(other, 0));
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < other; ++j) {
      const Weight& x = o.transposed ? w.at(j, i) : w.at(i, j);
      if (x.is_forbidden()) o.forb[i][j] = 1;
      else o.a[i][j] = x.value();
    }
  }
  return o;
}

// Common denominator scaling to int64 when every column sum stays below 2^62.
std::optional<std::pair<std::vector<std::vector<std::int64_t>>, BigInt>> scale_to_int(const Oriented& o) {
  BigInt d = 1;
  for (const auto& row : o.a)
    for (const auto& x : row) d = boost::multiprecision::lcm(d, BigInt(boost::multiprecision::denominator(x)));
  const BigInt limit = BigInt(1) << 62;
  std::vector<std::vector<std::int64_t>> out(o.a.size());
  BigInt total = 0;
  for (std::size_t i = 0; i < o.a.size(); ++i) {
    for (const auto& x : o.a[i]) {
      const BigInt s = boost::multiprecision::numerator(x) * (d / boost::multiprecision::denominator(x));
      total += boost::multiprecision::abs(s);
      if (total >= limit) return std::nullopt;
      out[i].push_back(s.convert_to<std::int64_t>());
    }
  }
  return std::make_pair(std::move(out), d);
}

}  // namespace

RectangleValue max_rectangle_value(const WeightMatrix& w, const SearchOptions& opts) {
  RectangleValue out;
  out.exact = opts.mode == SearchMode::exhaustive;
  if (w.rows() == 0 || w.cols() == 0) return out;
  const Oriented o = orient(w);
  const std::size_t side = o.a.size();
  if (opts.mode == SearchMode::exhaustive && side > opts.exhaustive_cap) {
    throw CapExceeded("rectangle search: smaller side " + std::to_string(side) + " exceeds cap " +
                      std::to_string(opts.exhaustive_cap));
  }
  if (opts.mode == SearchMode::exhaustive && side >= 63) {
    throw CapExceeded("rectangle search: smaller side too large for exhaustive mode");
  }
  if (auto scaled = scale_to_int(o)) {
    Searcher<std::int64_t> s(std::move(scaled->first), o.forb, o.transposed);
    auto best = opts.mode == SearchMode::exhaustive ? s.exhaustive(opts.threads)
                                                    : s.local_search(opts.restarts, opts.seed);
    out.value = Rational(BigInt(best.value), scaled->second);
    out.rect = std::move(best.rect);
  } else {
    Searcher<Rational> s(o.a, o.forb, o.transposed);
    auto best = opts.mode == SearchMode::exhaustive ? s.exhaustive(opts.threads)
                                                    : s.local_search(opts.restarts, opts.seed);
    out.value = best.value;
    out.rect = std::move(best.rect);
  }
  return out;
}

}  // namespace exmatch
