#include "koszul/cohomology.hpp"

#include <string>
#include <utility>

#include "koszul/errors.hpp"
#include "koszul/kappa.hpp"

namespace koszul {

namespace {

using Rank = SymmetricGroup::Rank;

std::shared_ptr<const SymmetricGroup> group_for(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw ResourceError("dense tables over S_" + std::to_string(n) +
                        " exceed the bound n <= " + std::to_string(bound));
  }
  if (n <= kExhaustiveBound) {
    return SymmetricGroup::get(n);
  }
  return std::make_shared<const SymmetricGroup>(n, bound);
}

} // namespace

std::string ModuleStructure::name() const {
  return kind_ == Kind::trivial ? "one" : "sgn";
}

Sign ModuleStructure::operator()(const Permutation& sigma) const {
  return kind_ == Kind::trivial ? Sign::plus() : sigma.signature();
}

Sign ModuleStructure::on_generators() const noexcept {
  return kind_ == Kind::trivial ? Sign::plus() : Sign::minus();
}

OneCochain::OneCochain(std::shared_ptr<const SymmetricGroup> group, std::vector<Sign> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->order()) {
    throw DimensionError("1-cochain table has " + std::to_string(values_.size()) +
                         " entries, expected " + std::to_string(group_->order()));
  }
}

OneCochain OneCochain::from_function(std::size_t n,
                                     const std::function<Sign(const Permutation&)>& fn) {
  auto group = SymmetricGroup::get(n);
  std::vector<Sign> values;
  values.reserve(group->order());
  for (const auto& p : group->elements()) {
    values.push_back(fn(p));
  }
  return OneCochain(std::move(group), std::move(values));
}

TwoCochain::TwoCochain(std::shared_ptr<const SymmetricGroup> group, std::vector<Sign> values)
    : n_(group->degree()), group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->order() * group_->order()) {
    throw DimensionError("2-cochain table has " + std::to_string(values_.size()) +
                         " entries, expected " +
                         std::to_string(group_->order() * group_->order()));
  }
}

TwoCochain::TwoCochain(std::size_t n, Function fn) : n_(n), fn_(std::move(fn)) {}

TwoCochain TwoCochain::constant(std::size_t n, Sign value) {
  auto group = SymmetricGroup::get(n);
  std::vector<Sign> values(group->order() * group->order(), value);
  return TwoCochain(std::move(group), std::move(values));
}

const SymmetricGroup& TwoCochain::group() const {
  if (!group_) {
    throw DomainError("lazy 2-cochain has no rank table");
  }
  return *group_;
}

Sign TwoCochain::at(Rank sigma, Rank rho) const {
  if (!group_) {
    return fn_(Permutation::from_lex_rank(n_, sigma), Permutation::from_lex_rank(n_, rho));
  }
  return values_[static_cast<std::size_t>(sigma) * group_->order() + rho];
}

Sign TwoCochain::operator()(const Permutation& sigma, const Permutation& rho) const {
  if (sigma.size() != n_ || rho.size() != n_) {
    throw DimensionError("2-cochain over S_" + std::to_string(n_) +
                         " evaluated on other permutations");
  }
  if (!group_) {
    return fn_(sigma, rho);
  }
  return at(group_->rank(sigma), group_->rank(rho));
}

bool operator==(const TwoCochain& a, const TwoCochain& b) {
  if (a.n_ != b.n_) {
    return false;
  }
  if (a.is_dense() && b.is_dense()) {
    return a.values_ == b.values_;
  }
  const auto group = SymmetricGroup::get(a.n_);
  for (const auto& s : group->elements()) {
    for (const auto& r : group->elements()) {
      if (a(s, r) != b(s, r)) {
        return false;
      }
    }
  }
  return true;
}

ThreeCochain::ThreeCochain(std::size_t n, Function fn, RankFunction rank_fn)
    : n_(n), fn_(std::move(fn)), rank_fn_(std::move(rank_fn)) {}

Sign ThreeCochain::operator()(const Permutation& sigma, const Permutation& tau,
                              const Permutation& rho) const {
  if (sigma.size() != n_ || tau.size() != n_ || rho.size() != n_) {
    throw DimensionError("3-cochain over S_" + std::to_string(n_) +
                         " evaluated on other permutations");
  }
  return fn_(sigma, tau, rho);
}

Sign ThreeCochain::at(Rank sigma, Rank tau, Rank rho) const {
  if (!rank_fn_) {
    throw DomainError("3-cochain has no rank-indexed evaluation");
  }
  return rank_fn_(sigma, tau, rho);
}

TwoCochain build_cf(const GradedSequence& f, CochainMode mode, std::size_t bound) {
  const std::vector<Degree> degrees = f.degrees();
  if (mode == CochainMode::lazy) {
    return TwoCochain(f.size(), [degrees](const Permutation& sigma, const Permutation& rho) {
      const auto g = act(rho, degrees);
      return kappa(sigma, g);
    });
  }
  auto group = group_for(f.size(), bound);
  const std::size_t order = group->order();
  std::vector<Sign> values(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    const auto g = act(group->element(static_cast<Rank>(r)), degrees);
    for (std::size_t s = 0; s < order; ++s) {
      values[s * order + r] = kappa(group->element(static_cast<Rank>(s)), g);
    }
  }
  return TwoCochain(std::move(group), std::move(values));
}

OneCochain restrict_to_identity(const TwoCochain& c) {
  const auto& group = c.group();
  std::vector<Sign> values;
  values.reserve(group.order());
  for (std::size_t s = 0; s < group.order(); ++s) {
    values.push_back(c.at(static_cast<Rank>(s), group.identity()));
  }
  return OneCochain(c.group_ptr(), std::move(values));
}

ThreeCochain coboundary2(const TwoCochain& c, ModuleStructure u) {
  ThreeCochain::Function fn = [c, u](const Permutation& s, const Permutation& t,
                                     const Permutation& r) {
    return (u(s) * c(t, r)) * c(s * t, r).inverse() * c(s, t * r) * c(s, t).inverse();
  };
  ThreeCochain::RankFunction rank_fn;
  if (c.is_dense()) {
    // u is read off per rank to avoid rebuilding permutations in sweeps.
    std::vector<Sign> u_values;
    for (const auto& p : c.group().elements()) {
      u_values.push_back(u(p));
    }
    rank_fn = [c, u_values = std::move(u_values)](Rank s, Rank t, Rank r) {
      const auto& group = c.group();
      return (u_values[s] * c.at(t, r)) * c.at(group.product(s, t), r).inverse() *
             c.at(s, group.product(t, r)) * c.at(s, t).inverse();
    };
  }
  return ThreeCochain(c.n(), std::move(fn), std::move(rank_fn));
}

TwoCochain coboundary1(const OneCochain& v, ModuleStructure u) {
  const auto& group = v.group();
  const std::size_t order = group.order();
  std::vector<Sign> values(order * order);
  for (std::size_t s = 0; s < order; ++s) {
    const Rank sr = static_cast<Rank>(s);
    const Sign us = u(group.element(sr));
    for (std::size_t t = 0; t < order; ++t) {
      const Rank tr = static_cast<Rank>(t);
      values[s * order + t] = (us * v.at(tr)) * v.at(group.product(sr, tr)).inverse() * v.at(sr);
    }
  }
  return TwoCochain(v.group_ptr(), std::move(values));
}

std::optional<ModuleStructure> module_from_degrees(const std::vector<Degree>& degrees) {
  if (degrees.size() < 2) {
    throw DomainError("module structures need n >= 2");
  }
  const Sign first = Sign::from_parity(product_parity(degrees[0], degrees[1]));
  for (std::size_t i = 1; i + 1 < degrees.size(); ++i) {
    if (Sign::from_parity(product_parity(degrees[i], degrees[i + 1])) != first) {
      return std::nullopt;
    }
  }
  return first.is_negative() ? ModuleStructure::signature() : ModuleStructure::trivial();
}

bool is_cocycle(const GradedSequence& f, ModuleStructure u, std::size_t bound) {
  const TwoCochain c = build_cf(f, CochainMode::dense, bound);
  const ThreeCochain delta = coboundary2(c, u);
  const auto order = static_cast<Rank>(c.group().order());
  for (Rank s = 0; s < order; ++s) {
    for (Rank t = 0; t < order; ++t) {
      for (Rank r = 0; r < order; ++r) {
        if (delta.at(s, t, r).is_negative()) {
          return false;
        }
      }
    }
  }
  return true;
}

CocycleVerdict is_cocycle(const GradedSequence& f, std::size_t bound) {
  CocycleVerdict verdict;
  verdict.module = module_from_degrees(f.degrees());
  if (verdict.module) {
    verdict.cocycle = is_cocycle(f, *verdict.module, bound);
  }
  return verdict;
}

} // namespace koszul
