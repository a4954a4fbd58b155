#include "fusion/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fusion {

std::string_view to_string(CrystalOp op) {
  switch (op) {
    case CrystalOp::raise: return "e";
    case CrystalOp::lower: return "f";
    case CrystalOp::reflect: return "s";
  }
  return "?";
}

CrystalOp parse_crystal_op(std::string_view text) {
  if (text == "e" || text == "raise") return CrystalOp::raise;
  if (text == "f" || text == "lower") return CrystalOp::lower;
  if (text == "s" || text == "reflect") return CrystalOp::reflect;
  throw std::invalid_argument("unknown crystal operator '" + std::string(text) + "'");
}

namespace {

/// Positions of unbracketed i (left part) and unbracketed i+1 (right part).
struct Bracketing {
  std::vector<std::size_t> free_low;
  std::vector<std::size_t> free_high;
};

Bracketing bracket(const Word& w, int i) {
  Bracketing b;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == i + 1) {
      b.free_high.push_back(p);
    } else if (w[p] == i) {
      if (b.free_high.empty()) {
        b.free_low.push_back(p);
      } else {
        b.free_high.pop_back();
      }
    }
  }
  return b;
}

}  // namespace

std::optional<Word> apply_crystal(const Word& w, CrystalOp op, int i, int alphabet) {
  if (i < 1 || i >= alphabet) {
    throw std::invalid_argument("crystal index " + std::to_string(i) + " outside 1.." +
                                std::to_string(alphabet - 1));
  }
  const Bracketing b = bracket(w, i);
  Word out(w);
  switch (op) {
    case CrystalOp::raise:
      if (b.free_high.empty()) return std::nullopt;
      out[b.free_high.front()] = i;
      return out;
    case CrystalOp::lower:
      if (b.free_low.empty()) return std::nullopt;
      out[b.free_low.back()] = i + 1;
      return out;
    case CrystalOp::reflect: {
      // i^a (i+1)^b  ->  i^b (i+1)^a over the unbracketed positions.
      std::vector<std::size_t> pos(b.free_low);
      pos.insert(pos.end(), b.free_high.begin(), b.free_high.end());
      const std::size_t lows = b.free_high.size();
      for (std::size_t k = 0; k < pos.size(); ++k) out[pos[k]] = k < lows ? i : i + 1;
      return out;
    }
  }
  return std::nullopt;
}

std::optional<SkewTableau> apply_crystal_tableau(const SkewTableau& t, CrystalOp op, int i, int alphabet) {
  if (t.shape().empty()) return std::nullopt;
  auto w = apply_crystal(reading_word(t), op, i, alphabet);
  if (!w) return std::nullopt;
  auto out = tableau_from_word(t.shape(), *w);
  if (!out) throw std::logic_error("crystal operator broke column-strictness of " + to_string(t));
  return out;
}

bool is_highest_weight(const SkewTableau& t, int alphabet) {
  alphabet = std::max(alphabet, t.max_letter());
  const Word w = reading_word(t);
  const bool lattice = is_lattice(w);
  bool annihilated = true;
  for (int i = 1; i < alphabet && annihilated; ++i) {
    annihilated = !apply_crystal(w, CrystalOp::raise, i, alphabet).has_value();
  }
  if (lattice != annihilated) {
    throw std::logic_error("lattice test and raising operators disagree on " + to_string(t));
  }
  return lattice;
}

SignedPermutation::SignedPermutation(int n) : perm_(static_cast<std::size_t>(n)) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

SignedPermutation::SignedPermutation(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<int> sorted(perm_);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k)) throw std::invalid_argument("not a permutation");
  }
}

int SignedPermutation::sign() const {
  int inversions = 0;
  for (std::size_t a = 0; a < perm_.size(); ++a) {
    for (std::size_t b = a + 1; b < perm_.size(); ++b) {
      if (perm_[a] > perm_[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

bool SignedPermutation::is_identity() const {
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] != static_cast<int>(k)) return false;
  }
  return true;
}

std::vector<int> SignedPermutation::apply(const std::vector<int>& x) const {
  if (x.size() != perm_.size()) throw std::invalid_argument("tuple length does not match permutation");
  std::vector<int> out(x.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) out[k] = x[static_cast<std::size_t>(perm_[k])];
  return out;
}

SignedPermutation SignedPermutation::left_multiply_simple(int r) const {
  if (r < 1 || r >= size()) throw std::invalid_argument("simple transposition index out of range");
  std::vector<int> p(perm_);
  std::swap(p[static_cast<std::size_t>(r - 1)], p[static_cast<std::size_t>(r)]);
  return SignedPermutation(std::move(p));
}

std::vector<int> staircase(int n) {
  std::vector<int> rho(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) rho[static_cast<std::size_t>(k)] = n - 1 - k;
  return rho;
}

std::vector<int> shifted_content(const SignedPermutation& sigma, const Partition& mu) {
  const int n = sigma.size();
  const auto rho = staircase(n);
  auto v = mu.padded(n);
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] += rho[static_cast<std::size_t>(k)];
  v = sigma.apply(v);
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] -= rho[static_cast<std::size_t>(k)];
  return v;
}

std::optional<int> rightmost_violation(const Word& w) {
  std::vector<int> counts;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int a = *it;
    if (static_cast<int>(counts.size()) < a) counts.resize(static_cast<std::size_t>(a), 0);
    const int now = ++counts[static_cast<std::size_t>(a - 1)];
    if (a > 1 && now > counts[static_cast<std::size_t>(a - 2)]) return a;
  }
  return std::nullopt;
}

CrystalPair rs_involution(const CrystalPair& p) {
  const int n = p.sigma.size();
  if (p.tableau.content(n) != shifted_content(p.sigma, p.mu)) {
    throw std::logic_error("crystal pair content does not match sigma(mu + rho) - rho");
  }
  const auto violation = rightmost_violation(reading_word(p.tableau));
  if (!violation) return p;
  const int r = *violation - 1;
  auto raised = apply_crystal_tableau(p.tableau, CrystalOp::raise, r, n);
  if (!raised) throw std::logic_error("raising operator annihilated a lattice violation");
  auto reflected = apply_crystal_tableau(*raised, CrystalOp::reflect, r, n);
  if (!reflected) throw std::logic_error("reflection annihilated a tableau");
  CrystalPair out{p.sigma.left_multiply_simple(r), std::move(*reflected), p.mu};
  if (out.tableau.content(n) != shifted_content(out.sigma, out.mu)) {
    throw std::logic_error("involution image violates the crystal pair invariant");
  }
  return out;
}

void for_each_crystal_pair(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                           const std::function<void(const CrystalPair&)>& visit) {
  if (!nu.contains(lambda) || lambda.size() + mu.size() != nu.size()) return;
  if (n <= 0) n = std::max(1, mu.length());
  const SkewShape shape(nu, lambda);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    SignedPermutation sigma(perm);
    const auto content = shifted_content(sigma, mu);
    if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; })) continue;
    for (auto& t : enumerate_skew_tableaux(shape, content)) visit(CrystalPair{sigma, std::move(t), mu});
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::int64_t lr_via_involution(const Partition& lambda, const Partition& mu, const Partition& nu) {
  std::int64_t fixed = 0;
  for_each_crystal_pair(lambda, mu, nu, 0, [&](const CrystalPair& p) {
    if (rs_involution(p) == p) ++fixed;
  });
  return fixed;
}

}  // namespace fusion
