#include "lls/sequences.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lls {

namespace {

void require_same_context(const VanishingSequence& s, const VanishingSequence& t,
                          const char* where) {
  if (!s.same_context(t)) {
    throw std::invalid_argument(std::string(where) + ": context mismatch between " +
                                s.to_string() + " (d=" + std::to_string(s.degree()) +
                                ") and " + t.to_string() +
                                " (d=" + std::to_string(t.degree()) + ")");
  }
}

}  // namespace

VanishingSequence::VanishingSequence(std::vector<int> entries, int degree)
    : entries_(std::move(entries)), degree_(degree) {
  if (entries_.empty()) {
    throw std::invalid_argument("vanishing sequence: empty entry list");
  }
  if (degree_ < 0) {
    throw std::invalid_argument("vanishing sequence: negative degree");
  }
  if (entries_.front() < 0) {
    throw std::invalid_argument("vanishing sequence " + to_string() +
                                ": first entry negative");
  }
  if (entries_.back() > degree_) {
    throw std::invalid_argument("vanishing sequence " + to_string() +
                                ": last entry exceeds degree " + std::to_string(degree_));
  }
  for (std::size_t j = 0; j + 1 < entries_.size(); ++j) {
    if (entries_[j] >= entries_[j + 1]) {
      throw std::invalid_argument("vanishing sequence " + to_string() +
                                  ": not strictly increasing");
    }
  }
}

std::string VanishingSequence::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) out << ',';
    out << entries_[j];
  }
  out << ')';
  return out.str();
}

VanishingSequence unramified_sequence(int r, int d) {
  std::vector<int> e(static_cast<std::size_t>(r) + 1);
  std::iota(e.begin(), e.end(), 0);
  return VanishingSequence(std::move(e), d);
}

std::vector<VanishingSequence> all_vanishing_sequences(int r, int d) {
  std::vector<VanishingSequence> out;
  if (r < 0 || d < 0 || r > d) return out;
  const int k = r + 1;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.emplace_back(cur, d);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == d - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < k; ++t) {
      cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return out;
}

BNProblem::BNProblem(int g_in, VanishingSequence a_in, VanishingSequence b_in)
    : g(g_in), a(std::move(a_in)), b(std::move(b_in)) {
  if (g < 0) throw std::invalid_argument("problem: negative genus");
  require_same_context(a, b, "problem");
}

std::string BNProblem::to_string() const {
  std::ostringstream out;
  out << "g=" << g << " r=" << r() << " d=" << d() << " a=" << a.to_string()
      << " b=" << b.to_string();
  return out.str();
}

std::int64_t rho(const BNProblem& p) {
  const std::int64_t r = p.r();
  std::int64_t total = p.g - (r + 1) * (r + p.g - p.d());
  for (int j = 0; j <= p.r(); ++j) total -= p.a[j] - j;
  for (int j = 0; j <= p.r(); ++j) total -= p.b[j] - j;
  return total;
}

std::int64_t rho_hat(const BNProblem& p) {
  const int r = p.r();
  const std::int64_t threshold = p.d() - p.g;
  std::int64_t total = p.g;
  for (int j = 0; j <= r; ++j) {
    const std::int64_t sum = p.a[j] + p.b[r - j];
    if (sum > threshold) total -= sum - threshold;
  }
  return total;
}

VanishingSequence complement(const VanishingSequence& s) {
  const int r = s.rank();
  const int d = s.degree();
  std::vector<int> e(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) e[static_cast<std::size_t>(j)] = d - s[r - j];
  return VanishingSequence(std::move(e), d);
}

bool dominates(const VanishingSequence& s, const VanishingSequence& t) {
  require_same_context(s, t, "dominates");
  for (int j = 0; j <= s.rank(); ++j) {
    if (s[j] < t[j]) return false;
  }
  return true;
}

VanishingSequence merge_max(const VanishingSequence& s, const VanishingSequence& t) {
  require_same_context(s, t, "merge_max");
  std::vector<int> e(static_cast<std::size_t>(s.rank()) + 1);
  for (int j = 0; j <= s.rank(); ++j) {
    e[static_cast<std::size_t>(j)] = std::max(s[j], t[j]);
  }
  return VanishingSequence(std::move(e), s.degree());
}

}  // namespace lls
