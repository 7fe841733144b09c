#pragma once

#include "lls/sequences.hpp"

namespace lls {

// Criterion on a general smooth 2-marked curve of genus g: rho_hat >= 0.
bool is_nonempty_general(const BNProblem& p);

// Genus 0: a_j + b_{r-j} <= d for all j.
bool is_nonempty_genus0(const VanishingSequence& a, const VanishingSequence& b);

// Genus 1, marked points in general position: a_j + b_{r-j} <= d for all j,
// with equality for at most one j.  Deliberately coded from the
// equality-count form, not via rho_hat, so the equivalence of the two is a
// real cross-check.
bool is_nonempty_genus1(const VanishingSequence& a, const VanishingSequence& b);

// Dispatch over the two base genera; anything outside {0,1} is rejected.
bool is_nonempty_component(int genus, const VanishingSequence& a,
                           const VanishingSequence& b);

}  // namespace lls
