#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "koszul/graded_sequence.hpp"
#include "koszul/permutation.hpp"
#include "koszul/sign.hpp"
#include "koszul/symmetric_group.hpp"

namespace koszul {

/// An S_n-module structure on {+1, -1}: sigma acts by multiplication with
/// u(sigma) for a group morphism u. Only two exist.
class ModuleStructure {
public:
  enum class Kind { trivial, signature };

  static ModuleStructure trivial() noexcept { return ModuleStructure(Kind::trivial); }
  static ModuleStructure signature() noexcept { return ModuleStructure(Kind::signature); }

  Kind kind() const noexcept { return kind_; }
  std::string name() const;

  Sign operator()(const Permutation& sigma) const;
  /// The common value u(s_i).
  Sign on_generators() const noexcept;

  friend bool operator==(ModuleStructure, ModuleStructure) = default;

private:
  explicit ModuleStructure(Kind k) noexcept : kind_(k) {}
  Kind kind_;
};

/// A 1-cochain S_n -> {+1, -1}, stored densely by lexicographic rank.
class OneCochain {
public:
  OneCochain(std::shared_ptr<const SymmetricGroup> group, std::vector<Sign> values);
  static OneCochain from_function(std::size_t n, const std::function<Sign(const Permutation&)>& fn);

  std::size_t n() const noexcept { return group_->degree(); }
  const SymmetricGroup& group() const noexcept { return *group_; }
  std::shared_ptr<const SymmetricGroup> group_ptr() const noexcept { return group_; }

  Sign at(SymmetricGroup::Rank sigma) const { return values_[sigma]; }
  Sign operator()(const Permutation& sigma) const { return at(group_->rank(sigma)); }

  friend bool operator==(const OneCochain& a, const OneCochain& b) {
    return a.n() == b.n() && a.values_ == b.values_;
  }

private:
  std::shared_ptr<const SymmetricGroup> group_;
  std::vector<Sign> values_;
};

/// A 2-cochain S_n x S_n -> {+1, -1}.
///
/// Dense cochains hold a table indexed by (rank(sigma), rank(rho)) in
/// lexicographic rank order; lazy cochains evaluate a function on demand
/// and work for any n.
class TwoCochain {
public:
  using Function = std::function<Sign(const Permutation&, const Permutation&)>;

  TwoCochain(std::shared_ptr<const SymmetricGroup> group, std::vector<Sign> values);
  TwoCochain(std::size_t n, Function fn);

  static TwoCochain constant(std::size_t n, Sign value);

  std::size_t n() const noexcept { return n_; }
  bool is_dense() const noexcept { return group_ != nullptr; }

  /// Dense only.
  const SymmetricGroup& group() const;
  std::shared_ptr<const SymmetricGroup> group_ptr() const noexcept { return group_; }
  Sign at(SymmetricGroup::Rank sigma, SymmetricGroup::Rank rho) const;

  Sign operator()(const Permutation& sigma, const Permutation& rho) const;

  /// Pointwise equality; both must be dense.
  friend bool operator==(const TwoCochain& a, const TwoCochain& b);

private:
  std::size_t n_;
  std::shared_ptr<const SymmetricGroup> group_;
  std::vector<Sign> values_;
  Function fn_;
};

/// A 3-cochain, evaluated lazily from the 2-cochain it was derived from.
class ThreeCochain {
public:
  using Function = std::function<Sign(const Permutation&, const Permutation&, const Permutation&)>;
  using RankFunction = std::function<Sign(SymmetricGroup::Rank, SymmetricGroup::Rank, SymmetricGroup::Rank)>;

  ThreeCochain(std::size_t n, Function fn, RankFunction rank_fn = {});

  std::size_t n() const noexcept { return n_; }
  Sign operator()(const Permutation& sigma, const Permutation& tau, const Permutation& rho) const;
  /// Fast path for coboundaries of dense cochains; throws otherwise.
  Sign at(SymmetricGroup::Rank sigma, SymmetricGroup::Rank tau, SymmetricGroup::Rank rho) const;

private:
  std::size_t n_;
  Function fn_;
  RankFunction rank_fn_;
};

enum class CochainMode { dense, lazy };

/// c_f(sigma, rho) = kappa(sigma, rho(f)). Dense mode throws ResourceError
/// when n > bound.
TwoCochain build_cf(const GradedSequence& f, CochainMode mode = CochainMode::dense,
                    std::size_t bound = kExhaustiveBound);

/// The 1-cochain sigma -> c(sigma, e).
OneCochain restrict_to_identity(const TwoCochain& c);

/// delta(c)(s, t, r) = (s . c(t, r)) c(st, r)^{-1} c(s, tr) c(s, t)^{-1}
/// with s . x = u(s) x.
ThreeCochain coboundary2(const TwoCochain& c, ModuleStructure u);

/// delta(v)(s, t) = (s . v(t)) v(st)^{-1} v(s).
TwoCochain coboundary1(const OneCochain& v, ModuleStructure u);

/// u(s_i) = (-1)^{|f_i||f_{i+1}|} when these all agree; none otherwise.
std::optional<ModuleStructure> module_from_degrees(const std::vector<Degree>& degrees);

/// True iff delta(c_f) == +1 on all of S_n^3 for the structure u.
/// Throws ResourceError when n > bound.
bool is_cocycle(const GradedSequence& f, ModuleStructure u, std::size_t bound = kExhaustiveBound);

struct CocycleVerdict {
  std::optional<ModuleStructure> module; // none: no admissible module structure
  bool cocycle = false;
};

/// Uses module_from_degrees(|f|) for u.
CocycleVerdict is_cocycle(const GradedSequence& f, std::size_t bound = kExhaustiveBound);

} // namespace koszul
