#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lls {

// Strictly increasing integer sequence a_0 < ... < a_r with a_0 >= 0 and
// a_r <= d.  The (rank, degree) context travels with the sequence so that
// mixing sequences from different settings fails loudly instead of
// producing garbage.
class VanishingSequence {
 public:
  VanishingSequence(std::vector<int> entries, int degree);

  int rank() const { return static_cast<int>(entries_.size()) - 1; }
  int degree() const { return degree_; }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }

  bool same_context(const VanishingSequence& other) const {
    return degree_ == other.degree_ && entries_.size() == other.entries_.size();
  }

  std::string to_string() const;  // "(0,2,3)"

  friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;
  // Lexicographic on entries; meaningful within a single context.
  friend bool operator<(const VanishingSequence& x, const VanishingSequence& y) {
    return x.entries_ < y.entries_;
  }

 private:
  std::vector<int> entries_;
  int degree_;
};

// The sequence (0,1,...,r): no ramification imposed.
VanishingSequence unramified_sequence(int r, int d);

// Every vanishing sequence for the context (r, d), in lexicographic order.
// Empty when r > d, where no strictly increasing (r+1)-tuple fits in [0,d].
std::vector<VanishingSequence> all_vanishing_sequences(int r, int d);

// Two-pointed problem: genus g with vanishing at least a imposed at the
// first marked point and at least b at the second.
struct BNProblem {
  BNProblem(int g, VanishingSequence a, VanishingSequence b);

  int g;
  VanishingSequence a;
  VanishingSequence b;

  int r() const { return a.rank(); }
  int d() const { return a.degree(); }

  std::string to_string() const;

  friend bool operator==(const BNProblem&, const BNProblem&) = default;
};

// Expected dimension g - (r+1)(r+g-d) - sum_j (a_j - j) - sum_j (b_j - j);
// equivalently g - sum_j (a_j + b_{r-j} - (d-g)) over all j.  May be
// negative.
std::int64_t rho(const BNProblem& p);

// g minus the sum of a_j + b_{r-j} - (d-g) over only those j where that
// quantity is positive.  Governs nonemptiness (>= 0) and connectedness
// (>= 1); rho_hat <= rho always, with equality when d <= r+g.
std::int64_t rho_hat(const BNProblem& p);

// t_j = d - s_{r-j}.  An involution; (s, complement(s)) are the
// complementary pairs with s_j + t_{r-j} = d for all j.
VanishingSequence complement(const VanishingSequence& s);

// Entrywise s_j >= t_j.
bool dominates(const VanishingSequence& s, const VanishingSequence& t);

// Entrywise maximum: the least sequence dominating both inputs.
VanishingSequence merge_max(const VanishingSequence& s, const VanishingSequence& t);

}  // namespace lls
