#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "fusion/partition.hpp"
#include "fusion/tableau.hpp"

namespace fusion {

/// raise = e_i, lower = f_i, reflect = s_i.
enum class CrystalOp { raise, lower, reflect };

std::string_view to_string(CrystalOp op);
/// Accepts "e"/"raise", "f"/"lower", "s"/"reflect".
CrystalOp parse_crystal_op(std::string_view text);

/// Applies a crystal operator to a word using the (i+1, i) bracketing.
/// Absent when the operator annihilates the word. Throws
/// std::invalid_argument unless 1 <= i < alphabet.
std::optional<Word> apply_crystal(const Word& w, CrystalOp op, int i, int alphabet);

/// Acts on the column reading word and writes the result back into the
/// same shape. Absent on annihilation or for an empty tableau.
std::optional<SkewTableau> apply_crystal_tableau(const SkewTableau& t, CrystalOp op, int i, int alphabet);

/// Lattice reading word. Also checks that every e_i annihilates exactly when
/// the word is lattice and throws std::logic_error if the two disagree.
bool is_highest_weight(const SkewTableau& t, int alphabet);

/// Permutation of {1..n} acting on n-tuples by (sigma x)_i = x_{perm[i]}.
class SignedPermutation {
 public:
  explicit SignedPermutation(int n);
  explicit SignedPermutation(std::vector<int> perm);  ///< 0-based images

  const std::vector<int>& perm() const { return perm_; }
  int size() const { return static_cast<int>(perm_.size()); }
  int sign() const;
  bool is_identity() const;

  std::vector<int> apply(const std::vector<int>& x) const;
  /// Returns sigma_r * this (1-based r, simple transposition of r, r+1).
  SignedPermutation left_multiply_simple(int r) const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> perm_;
};

/// Pair (sigma, t) with content(t) = sigma(mu + rho) - rho.
struct CrystalPair {
  SignedPermutation sigma;
  SkewTableau tableau;
  Partition mu;

  friend bool operator==(const CrystalPair&, const CrystalPair&) = default;
};

std::vector<int> staircase(int n);

/// Content sigma(mu + rho) - rho on n-tuples; may contain negative entries.
std::vector<int> shifted_content(const SignedPermutation& sigma, const Partition& mu);

/// Sign-reversing involution: fixed on highest-weight tableaux, otherwise
/// (sigma_r sigma, s_r e_r t) with r+1 the rightmost lattice-violating letter.
/// Throws std::logic_error if the pair invariant breaks.
CrystalPair rs_involution(const CrystalPair& p);

/// Letter r+1 of the rightmost lattice violation in w, or absent if w is lattice.
std::optional<int> rightmost_violation(const Word& w);

/// Visits every pair (sigma, t) with sigma in S_n, t of shape nu/lambda and
/// content sigma(mu + rho) - rho. n defaults to max(1, length(mu)).
void for_each_crystal_pair(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                           const std::function<void(const CrystalPair&)>& visit);

/// Fixed points of rs_involution over all pairs; equals lr_coefficient.
std::int64_t lr_via_involution(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace fusion
