#include "koszul/verify.hpp"

#include <deque>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <unordered_map>

#include "koszul/cohomology.hpp"
#include "koszul/errors.hpp"
#include "koszul/kappa.hpp"
#include "koszul/morphism.hpp"
#include "koszul/parse.hpp"
#include "koszul/symmetric_group.hpp"
#include "koszul/word.hpp"

namespace koszul {

Word shortest_word(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  if (n > kMinwordBound) {
    throw ResourceError("BFS over S_" + std::to_string(n) + " limited to n <= " +
                        std::to_string(kMinwordBound));
  }
  if (n < 2) {
    throw DomainError("words need n >= 2");
  }
  // parent[p] = (letter prepended, predecessor); left-multiplying by s_i
  // prepends s_i to the word of the predecessor.
  std::map<Permutation, std::pair<std::size_t, Permutation>> parent;
  const Permutation identity(n);
  std::deque<Permutation> queue{identity};
  parent.emplace(identity, std::make_pair(std::size_t{0}, identity));
  while (!queue.empty() && parent.find(sigma) == parent.end()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (std::size_t i = 1; i < n; ++i) {
      Permutation next = Permutation::adjacent(n, i) * p;
      if (parent.emplace(next, std::make_pair(i, p)).second) {
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Generator> letters;
  for (Permutation p = sigma; !p.is_identity();) {
    const auto& [letter, prev] = parent.at(p);
    letters.push_back({letter, 1});
    p = prev;
  }
  return Word(n, std::move(letters));
}

Sign kappa_bruteforce_minword(const Permutation& sigma, const GradedSequence& g) {
  if (sigma.size() != g.size()) {
    throw DimensionError("permutation of S_" + std::to_string(sigma.size()) +
                         " paired with a sequence of length " + std::to_string(g.size()));
  }
  return kappa_word(shortest_word(sigma), g);
}

bool SuiteReport::ok() const noexcept {
  for (const auto& c : checks) {
    if (!c.ok()) {
      return false;
    }
  }
  return true;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "seed " << seed << ", n = " << n_min << ".." << n_max << "\n";
  for (const auto& c : checks) {
    out << (c.ok() ? "PASS " : "FAIL ") << c.name << "  passed=" << c.passed
        << " failed=" << c.failed << "  [" << c.population << "]\n";
    if (c.first_counterexample) {
      out << "     first counterexample: " << *c.first_counterexample << "\n";
    }
  }
  out << (ok() ? "all checks passed" : "FAILURES") << "\n";
  return out.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["seed"] = seed;
  doc["n_range"] = {n_min, n_max};
  doc["ok"] = ok();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["population"] = c.population;
    item["passed"] = c.passed;
    item["failed"] = c.failed;
    item["first_counterexample"] =
        c.first_counterexample ? nlohmann::ordered_json(*c.first_counterexample)
                               : nlohmann::ordered_json(nullptr);
    doc["checks"].push_back(std::move(item));
  }
  return doc.dump(2);
}

namespace {

using Rank = SymmetricGroup::Rank;

/// Accumulates one named check across every n.
class Check {
public:
  explicit Check(CheckResult& result) : result_(result) {}

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (!result_.first_counterexample) {
      result_.first_counterexample = describe();
    }
  }

private:
  CheckResult& result_;
};

class Registry {
public:
  Check get(const std::string& name, const std::string& population) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, checks_.size()).first;
      checks_.push_back({name, population, 0, 0, std::nullopt});
    }
    return Check(checks_[it->second]);
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

private:
  std::vector<CheckResult> checks_;
  std::unordered_map<std::string, std::size_t> index_;
};

std::string render(const Permutation& p) {
  return format_one_line(p) + " = " + format_cycles(p);
}

std::string render(const std::vector<Degree>& d) {
  return "degrees " + format_degrees(d);
}

struct Context {
  std::size_t n = 0;
  std::shared_ptr<const SymmetricGroup> group;
  std::size_t trials = 0;
  std::mt19937_64* rng = nullptr;
  std::vector<std::vector<Degree>> patterns; // one lift per parity pattern
  std::vector<std::vector<Degree>> all;      // patterns + random samples

  Rank random_rank() const {
    std::uniform_int_distribution<Rank> dist(0, static_cast<Rank>(group->order() - 1));
    return dist(*rng);
  }
  const Permutation& el(Rank r) const { return group->element(r); }

  /// fn(a, b) over all pairs when exhaustive, else `trials` random pairs.
  template <typename Fn>
  void pairs(bool exhaustive, Fn&& fn) const {
    const auto order = static_cast<Rank>(group->order());
    if (exhaustive) {
      for (Rank a = 0; a < order; ++a) {
        for (Rank b = 0; b < order; ++b) {
          fn(a, b);
        }
      }
      return;
    }
    for (std::size_t k = 0; k < trials; ++k) {
      const Rank a = random_rank();
      fn(a, random_rank());
    }
  }

  template <typename Fn>
  void triples(bool exhaustive, Fn&& fn) const {
    const auto order = static_cast<Rank>(group->order());
    if (exhaustive) {
      for (Rank a = 0; a < order; ++a) {
        for (Rank b = 0; b < order; ++b) {
          for (Rank c = 0; c < order; ++c) {
            fn(a, b, c);
          }
        }
      }
      return;
    }
    for (std::size_t k = 0; k < trials; ++k) {
      const Rank a = random_rank();
      const Rank b = random_rank();
      fn(a, b, random_rank());
    }
  }
};

std::vector<Degree> lift(unsigned mask, std::size_t n, std::mt19937_64& rng) {
  std::vector<Degree> d;
  for (std::size_t i = 0; i < n; ++i) {
    const bool odd = ((mask >> i) & 1U) != 0;
    // 2k + 1 in [-49, 49] or 2k in [-50, 50]
    std::uniform_int_distribution<std::int64_t> half(-25, odd ? 24 : 25);
    d.emplace_back(2 * half(rng) + (odd ? 1 : 0));
  }
  return d;
}

std::vector<Degree> uniform_degrees(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  std::vector<Degree> d;
  for (std::size_t i = 0; i < n; ++i) {
    d.emplace_back(dist(rng));
  }
  return d;
}

std::vector<Degree> forbidden_degrees(std::size_t n) {
  std::vector<Degree> d(n, Degree{0});
  d[0] = 1;
  d[1] = 1;
  return d;
}

bool all_parity(const std::vector<Degree>& d, unsigned parity) {
  for (auto x : d) {
    if (x.parity() != parity) {
      return false;
    }
  }
  return true;
}

Sign generator_sign(const std::vector<Degree>& g, std::size_t i) {
  return Sign::from_parity(product_parity(g[i - 1], g[i]));
}

// --- sign map ------------------------------------------------------------

void check_kappa(Registry& reg, const Context& ctx, const std::vector<Word>& minwords) {
  const bool exhaustive = ctx.n <= 5;
  const std::string scope = exhaustive ? "exhaustive S_n" : "sampled S_n";
  for (const auto& d : ctx.all) {
    const GradedSequence f(d);
    const TwoCochain c = build_cf(f, exhaustive ? CochainMode::dense : CochainMode::lazy);

    Check oracle = reg.get("kappa.oracle_agreement",
                           "kappa vs inversion-sum exponent vs BFS-minimal word (n<=5); "
                           "all g in E_f; parity patterns + random degrees");
    ctx.pairs(exhaustive, [&](Rank s, Rank p) {
      const auto g = act(ctx.el(p), d);
      const Sign k = c.at(s, p);
      const Sign closed = Sign::from_parity(kappa_exponent(ctx.el(s), g));
      bool ok = k == closed;
      if (!minwords.empty()) {
        ok = ok && kappa_word(minwords[s], g) == k;
      }
      oracle.expect(ok, [&] { return "sigma " + render(ctx.el(s)) + ", g " + render(g); });
    });

    Check gen = reg.get("kappa.generator_values",
                        "kappa(s_i, g) = (-1)^{|g_i||g_i+1|}; all i, all g in E_f");
    const auto order = static_cast<Rank>(ctx.group->order());
    for (std::size_t i = 1; i < ctx.n; ++i) {
      const Rank si = ctx.group->rank(Permutation::adjacent(ctx.n, i));
      const auto visit = [&](Rank p) {
        const auto g = act(ctx.el(p), d);
        gen.expect(c.at(si, p) == generator_sign(g, i),
                   [&] { return "i " + std::to_string(i) + ", g " + render(g); });
      };
      if (exhaustive) {
        for (Rank p = 0; p < order; ++p) {
          visit(p);
        }
      } else {
        for (std::size_t k = 0; k < ctx.trials; ++k) {
          visit(ctx.random_rank());
        }
      }
    }

    Check inverse = reg.get("kappa.inverse_rule",
                            "kappa(s^-1, g) = kappa(s, s^-1(g)); all s, all g in E_f");
    ctx.pairs(exhaustive, [&](Rank s, Rank p) {
      const Rank s_inv = ctx.group->inverse(s);
      inverse.expect(c.at(s_inv, p) == c.at(s, ctx.group->product(s_inv, p)), [&] {
        return "sigma " + render(ctx.el(s)) + ", g = " + format_one_line(ctx.el(p)) +
               "(f), " + render(d);
      });
    });

    Check parity = reg.get("kappa.parity_invariance",
                           "degrees replaced by parity and shifted by random even integers");
    std::uniform_int_distribution<std::int64_t> shift(-1000, 1000);
    std::vector<Degree> reduced;
    std::vector<Degree> shifted;
    for (auto x : d) {
      reduced.emplace_back(static_cast<std::int64_t>(x.parity()));
      shifted.emplace_back(x.value + 2 * shift(*ctx.rng));
    }
    for (Rank s = 0; s < (exhaustive ? order : static_cast<Rank>(ctx.trials)); ++s) {
      const Rank r = exhaustive ? s : ctx.random_rank();
      const Sign k = c.at(r, ctx.group->identity());
      parity.expect(k == kappa(ctx.el(r), reduced) && k == kappa(ctx.el(r), shifted), [&] {
        return "sigma " + render(ctx.el(r)) + ", " + render(d) + " vs " + render(shifted);
      });
    }

    if (all_parity(d, 1)) {
      Check odd = reg.get("kappa.all_odd_is_signature", "all-odd degree vectors, all g");
      ctx.pairs(exhaustive, [&](Rank s, Rank p) {
        odd.expect(c.at(s, p) == ctx.el(s).signature(),
                   [&] { return "sigma " + render(ctx.el(s)) + ", " + render(d); });
      });
    }
    if (all_parity(d, 0)) {
      Check even = reg.get("kappa.all_even_is_one", "all-even degree vectors, all g");
      ctx.pairs(exhaustive, [&](Rank s, Rank p) {
        even.expect(c.at(s, p) == Sign::plus(),
                    [&] { return "sigma " + render(ctx.el(s)) + ", " + render(d); });
      });
    }
  }

  // Heavier triple sweeps: one lift per parity pattern.
  for (const auto& d : ctx.patterns) {
    const GradedSequence f(d);
    const TwoCochain c = build_cf(f, exhaustive ? CochainMode::dense : CochainMode::lazy);
    Check cocycle = reg.get("kappa.cocycle_rule",
                            "kappa(st, g) = kappa(s, t(g)) kappa(t, g); all s, t, g in E_f "
                            "(n<=5), one lift per parity pattern");
    ctx.triples(exhaustive, [&](Rank s, Rank t, Rank p) {
      const Sign lhs = c.at(ctx.group->product(s, t), p);
      const Sign rhs = c.at(s, ctx.group->product(t, p)) * c.at(t, p);
      cocycle.expect(lhs == rhs, [&] {
        return "sigma " + render(ctx.el(s)) + ", tau " + render(ctx.el(t)) + ", g = " +
               format_one_line(ctx.el(p)) + "(f), " + render(d);
      });
    });

    Check base = reg.get("kappa.base_point_independence",
                         "kappa computed from base f' = pi(f) agrees with base f "
                         "(exhaustive n<=4, sampled otherwise)");
    ctx.triples(ctx.n <= 4, [&](Rank s, Rank r, Rank p) {
      const auto f_prime = act(ctx.el(p), d);
      const Sign via_prime = kappa(ctx.el(s), act(ctx.el(r), f_prime));
      const Sign via_f = c.at(s, ctx.group->product(r, p));
      base.expect(via_prime == via_f, [&] {
        return "sigma " + render(ctx.el(s)) + ", rho " + render(ctx.el(r)) + ", pi " +
               render(ctx.el(p)) + ", " + render(d);
      });
    });
  }

  if (ctx.n >= 3) {
    Check witness = reg.get("kappa.base_point_sensitivity",
                            "|f| = (1,1,0,...), f' = (f1,f3,f2,...): kappa(s1,f) = -1, "
                            "kappa(s1,f') = +1");
    const auto d = forbidden_degrees(ctx.n);
    const GradedSequence f(d);
    const GradedSequence f_prime = act(Permutation::adjacent(ctx.n, 2), f);
    const auto s1 = Permutation::adjacent(ctx.n, 1);
    witness.expect(kappa(s1, f) == Sign::minus() && kappa(s1, f_prime) == Sign::plus(),
                   [&] { return render(d); });
  }
}

// --- words ---------------------------------------------------------------

Word conjugated_relator(const Context& ctx, const std::vector<Word>& rels) {
  std::uniform_int_distribution<std::size_t> pick(0, rels.size() - 1);
  const Word x = random_word(ctx.n, 8, *ctx.rng);
  return x * rels[pick(*ctx.rng)] * x.inverse();
}

void check_words(Registry& reg, const Context& ctx) {
  const auto rels = relators(ctx.n);
  const bool exhaustive = ctx.n <= 5;
  const auto order = static_cast<Rank>(ctx.group->order());

  Check decompose = reg.get("words.decompose_adjacent",
                            "project(decompose(s)) = s and length = inversion count");
  for (Rank s = 0; s < order; ++s) {
    const Word w = decompose_adjacent(ctx.el(s));
    decompose.expect(project(w) == ctx.el(s) && w.length() == ctx.el(s).inversion_count(),
                     [&] { return "sigma " + render(ctx.el(s)); });
  }

  Check projection = reg.get("words.relators_project_to_identity", "every relator r");
  for (const auto& r : rels) {
    projection.expect(project(r).is_identity(), [&] { return "r = " + format_word(r); });
  }

  for (const auto& d : ctx.all) {
    Check lemma = reg.get("words.lemma_inverse_pairs",
                          "kappa(s_i, s_i^-1 g) kappa(s_i^-1, g) = 1 and symmetric form; "
                          "all i, all g in E_f");
    Check relator = reg.get("words.relators_evaluate_to_one",
                            "kappa_word(r, g) = +1 for every relator r, all g in E_f");
    const auto visit = [&](Rank p) {
      const auto g = act(ctx.el(p), d);
      for (std::size_t i = 1; i < ctx.n; ++i) {
        const Word s(ctx.n, {{i, 1}});
        const Word s_inv(ctx.n, {{i, -1}});
        const auto s_inv_g = act(project(s_inv), g);
        const auto s_g = act(project(s), g);
        const bool ok = kappa_word(s, s_inv_g) * kappa_word(s_inv, g) == Sign::plus() &&
                        kappa_word(s_inv, s_g) * kappa_word(s, g) == Sign::plus();
        lemma.expect(ok, [&] { return "i " + std::to_string(i) + ", g " + render(g); });
      }
      for (const auto& r : rels) {
        relator.expect(kappa_word(r, g) == Sign::plus(),
                       [&] { return "r = " + format_word(r) + ", g " + render(g); });
      }
    };
    if (exhaustive) {
      for (Rank p = 0; p < order; ++p) {
        visit(p);
      }
    } else {
      for (std::size_t k = 0; k < ctx.trials; ++k) {
        visit(ctx.random_rank());
      }
    }
  }

  for (const auto& d : ctx.patterns) {
    Check conj = reg.get("words.conjugated_relators",
                         "kappa_word(x r x^-1, g) = +1 for random words x");
    Check absorb = reg.get("words.normal_closure_absorption",
                           "kappa_word(a x, g) = kappa_word(x, g) for a in the normal closure");
    Check indep = reg.get("words.decomposition_independence",
                          "relators spliced into random words keep kappa_word; equals "
                          "kappa(project(w), g)");
    Check reduction = reg.get("words.free_reduction",
                              "reduce is idempotent, reduced, keeps projection and kappa_word");
    std::uniform_int_distribution<std::size_t> count(1, 3);
    for (std::size_t k = 0; k < ctx.trials; ++k) {
      const auto g = act(ctx.el(ctx.random_rank()), d);
      const Word xr = conjugated_relator(ctx, rels);
      conj.expect(kappa_word(xr, g) == Sign::plus(),
                  [&] { return "x r x^-1 = " + format_word(xr) + ", g " + render(g); });

      Word a(ctx.n);
      for (std::size_t j = count(*ctx.rng); j > 0; --j) {
        a = a * conjugated_relator(ctx, rels);
      }
      const Word x = random_word(ctx.n, 32, *ctx.rng);
      absorb.expect(kappa_word(a * x, g) == kappa_word(x, g) && project(a * x) == project(x),
                    [&] { return "a = " + format_word(a) + ", x = " + format_word(x); });

      std::uniform_int_distribution<std::size_t> cut(0, x.length());
      const std::size_t at = cut(*ctx.rng);
      const auto& letters = x.letters();
      const Word head(ctx.n, {letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(at)});
      const Word tail(ctx.n, {letters.begin() + static_cast<std::ptrdiff_t>(at), letters.end()});
      const Word spliced = head * conjugated_relator(ctx, rels) * tail;
      const Sign kx = kappa_word(x, g);
      indep.expect(project(spliced) == project(x) && kappa_word(spliced, g) == kx &&
                       kappa(project(x), g) == kx,
                   [&] { return "w = " + format_word(x) + ", w' = " + format_word(spliced); });

      const Word reduced = reduce(x);
      reduction.expect(reduced.is_reduced() && reduce(reduced) == reduced &&
                           project(reduced) == project(x) && kappa_word(reduced, g) == kx,
                       [&] { return "w = " + format_word(x); });
    }
  }
}

// --- morphism criteria ---------------------------------------------------

void check_morphism(Registry& reg, const Context& ctx) {
  const bool exhaustive = ctx.n <= 5;
  const auto order = static_cast<Rank>(ctx.group->order());
  for (const auto& d : ctx.patterns) {
    std::vector<Sign> row(order);
    for (Rank s = 0; s < order; ++s) {
      row[s] = kappa(ctx.el(s), d);
    }
    bool constant = true;
    for (auto v : row) {
      constant = constant && v == Sign::plus();
    }
    const bool morphism = morphism_bruteforce(d);

    Check criterion = reg.get("morphism.parity_criterion",
                              "morphism_bruteforce = is_morphism; every parity pattern");
    criterion.expect(morphism == is_morphism(d), [&] { return render(d); });

    Check one = reg.get("morphism.constant_one_criterion",
                        "kappa(-, f) = 1 iff at most one odd degree; every parity pattern");
    one.expect(constant == is_constant_one(d), [&] { return render(d); });

    if (morphism) {
      Check equal = reg.get("morphism.all_base_points_agree",
                            "when kappa(-, f) is a morphism, kappa(-, g) = kappa(-, f) for g in E_f");
      const TwoCochain c = build_cf(GradedSequence(d), exhaustive ? CochainMode::dense
                                                                  : CochainMode::lazy);
      ctx.pairs(exhaustive, [&](Rank s, Rank p) {
        equal.expect(c.at(s, p) == row[s], [&] {
          return "sigma " + render(ctx.el(s)) + ", g = " + format_one_line(ctx.el(p)) +
                 "(f), " + render(d);
        });
      });
    }
  }

  if (ctx.n >= 3) {
    Check forbidden = reg.get("morphism.forbidden_triplet",
                              "|f| = (1,1,0,...): not a morphism; kappa(s2 s1, f) = kappa(s2, f) "
                              "kappa(s1, f) = -1 but g = s2(f) breaks multiplicativity");
    const auto d = forbidden_degrees(ctx.n);
    const auto s1 = Permutation::adjacent(ctx.n, 1);
    const auto s2 = Permutation::adjacent(ctx.n, 2);
    const auto g = act(s2, d);
    forbidden.expect(!is_morphism(d) && !morphism_bruteforce(d) &&
                         kappa(s2 * s1, d) == Sign::minus() &&
                         kappa(s2, d) * kappa(s1, d) == Sign::minus() &&
                         kappa(s2 * s1, g) != kappa(s2, g) * kappa(s1, g),
                     [&] { return render(d); });
  }
}

// --- cohomology ----------------------------------------------------------

void check_cohomology(Registry& reg, const Context& ctx) {
  const bool dense = ctx.n <= 5;
  const auto order = static_cast<Rank>(ctx.group->order());
  const ModuleStructure structures[] = {ModuleStructure::trivial(), ModuleStructure::signature()};

  Check morphism = reg.get("cohomology.module_is_morphism",
                           "u(st) = u(s) u(t) for u in {one, sgn}; all s, t");
  for (const auto u : structures) {
    ctx.pairs(true, [&](Rank s, Rank t) {
      morphism.expect(u(ctx.el(ctx.group->product(s, t))) == u(ctx.el(s)) * u(ctx.el(t)),
                      [&] { return "u " + u.name() + ", sigma " + render(ctx.el(s)); });
    });
  }

  for (const auto& d : ctx.all) {
    const GradedSequence f(d);
    const TwoCochain c = build_cf(f, dense ? CochainMode::dense : CochainMode::lazy);
    Check row = reg.get("cohomology.generator_row",
                        "c_f(s_i, r) = (-1)^{|f_r^-1(i)||f_r^-1(i+1)|}; all i, r");
    const auto visit = [&](Rank r) {
      const Permutation r_inv = ctx.el(r).inverse();
      for (std::size_t i = 1; i < ctx.n; ++i) {
        const Rank si = ctx.group->rank(Permutation::adjacent(ctx.n, i));
        const Sign expected = Sign::from_parity(product_parity(d[r_inv[i - 1]], d[r_inv[i]]));
        row.expect(c.at(si, r) == expected, [&] {
          return "i " + std::to_string(i) + ", rho " + render(ctx.el(r)) + ", " + render(d);
        });
      }
    };
    if (dense) {
      for (Rank r = 0; r < order; ++r) {
        visit(r);
      }
    } else {
      for (std::size_t k = 0; k < ctx.trials; ++k) {
        visit(ctx.random_rank());
      }
    }

    Check unit = reg.get("cohomology.identity_row", "c_f(e, t) = +1 for all t");
    for (Rank t = 0; t < (dense ? order : 1); ++t) {
      unit.expect(c.at(ctx.group->identity(), t) == Sign::plus(),
                  [&] { return "tau " + render(ctx.el(t)) + ", " + render(d); });
    }
  }

  for (const auto& d : ctx.patterns) {
    const GradedSequence f(d);
    const TwoCochain c = build_cf(f, dense ? CochainMode::dense : CochainMode::lazy);

    Check recursion = reg.get("cohomology.cf_recursion",
                              "c_f(st, r) = c_f(s, tr) c_f(t, r) by direct kappa evaluation "
                              "(exhaustive n<=4, sampled otherwise)");
    ctx.triples(ctx.n <= 4, [&](Rank s, Rank t, Rank r) {
      const Permutation& sp = ctx.el(s);
      const Permutation& tp = ctx.el(t);
      const Permutation& rp = ctx.el(r);
      const Sign lhs = kappa(sp * tp, act(rp, d));
      const Sign rhs = kappa(sp, act(tp * rp, d)) * kappa(tp, act(rp, d));
      recursion.expect(lhs == rhs, [&] {
        return "sigma " + render(sp) + ", tau " + render(tp) + ", rho " + render(rp) + ", " +
               render(d);
      });
    });

    Check identity = reg.get("cohomology.coboundary_identity",
                             "delta(c_f)(s,t,r) = u(s) c_f(s,t)^-1 for both u "
                             "(exhaustive n<=4, sampled otherwise)");
    for (const auto u : structures) {
      const ThreeCochain delta = coboundary2(c, u);
      ctx.triples(ctx.n <= 4, [&](Rank s, Rank t, Rank r) {
        const Sign lhs = dense ? delta.at(s, t, r) : delta(ctx.el(s), ctx.el(t), ctx.el(r));
        identity.expect(lhs == u(ctx.el(s)) * c.at(s, t).inverse(), [&] {
          return "u " + u.name() + ", sigma " + render(ctx.el(s)) + ", tau " +
                 render(ctx.el(t)) + ", rho " + render(ctx.el(r)) + ", " + render(d);
        });
      });
    }

    const auto derived = module_from_degrees(d);
    Check structure = reg.get("cohomology.module_from_degrees",
                              "u from degrees exists when the parity criterion holds; "
                              "u = one iff <= 1 odd, u = sgn iff all odd");
    if (is_morphism(d)) {
      const bool ok = derived.has_value() &&
                      (derived->kind() == ModuleStructure::Kind::trivial) == is_constant_one(d) &&
                      (derived->kind() == ModuleStructure::Kind::signature) == all_parity(d, 1);
      structure.expect(ok, [&] { return render(d); });
    }

    if (!dense) {
      continue;
    }
    Check criterion = reg.get("cohomology.cocycle_criterion",
                              "is_cocycle(f, u) iff parity criterion and u = module from degrees; "
                              "exhaustive, n<=5");
    for (const auto u : structures) {
      const bool expected = is_morphism(d) && derived.has_value() && *derived == u;
      criterion.expect(is_cocycle(f, u) == expected,
                       [&] { return "u " + u.name() + ", " + render(d); });
    }
    if (derived) {
      criterion.expect(is_cocycle(f, *derived) == is_morphism(d),
                       [&] { return "derived u " + derived->name() + ", " + render(d); });
    }

    if (is_morphism(d) && derived) {
      Check cobound = reg.get("cohomology.cf_is_coboundary_of_u",
                              "c_f(-, e) = u and coboundary1(c_f(-, e), u) = c_f pointwise");
      const OneCochain v = restrict_to_identity(c);
      const OneCochain u_values =
          OneCochain::from_function(ctx.n, [&](const Permutation& p) { return (*derived)(p); });
      cobound.expect(v == u_values && coboundary1(v, *derived) == c,
                     [&] { return "u " + derived->name() + ", " + render(d); });
    }
  }

  Check asym = reg.get("cohomology.non_symmetry",
                       "|f| = (1,1,0,...) (or (1,1) for n=2): c_f(e,s1) = +1, c_f(s1,e) = -1");
  std::vector<Degree> d = ctx.n == 2 ? std::vector<Degree>{1, 1} : forbidden_degrees(ctx.n);
  const TwoCochain c = build_cf(GradedSequence(d), CochainMode::lazy);
  const Permutation e(ctx.n);
  const auto s1 = Permutation::adjacent(ctx.n, 1);
  asym.expect(c(e, s1) == Sign::plus() && c(s1, e) == Sign::minus(),
              [&] { return render(d); });
}

// --- worked example ------------------------------------------------------

void check_example(Registry& reg, std::size_t samples, std::mt19937_64& rng) {
  const Permutation rho = Permutation::from_one_based(std::vector<std::size_t>{2, 5, 3, 1, 4});
  Check example = reg.get("example.rho_25314",
                          "kappa([2,5,3,1,4], f) = (-1)^{z1z4+z3z4+z2z5+z2z4+z2z3}; "
                          "random degrees in [-50,50]^5 and every parity pattern");
  std::vector<std::vector<Degree>> vectors;
  for (std::size_t k = 0; k < samples; ++k) {
    vectors.push_back(uniform_degrees(5, rng));
  }
  for (unsigned mask = 0; mask < 32U; ++mask) {
    vectors.push_back(lift(mask, 5, rng));
  }
  for (const auto& z : vectors) {
    const auto p = [&](std::size_t a, std::size_t b) { return product_parity(z[a - 1], z[b - 1]); };
    const unsigned exponent = p(1, 4) ^ p(3, 4) ^ p(2, 5) ^ p(2, 4) ^ p(2, 3);
    example.expect(kappa(rho, z) == Sign::from_parity(exponent), [&] { return render(z); });
  }

  Check terms = reg.get("example.symbolic_terms",
                        "bubble-sort monomials of [2,5,3,1,4] are exactly the five terms");
  const std::vector<std::pair<std::size_t, std::size_t>> expected{
      {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3}};
  terms.expect(kappa_monomials(rho) == expected, [] { return "rho [2,5,3,1,4]"; });
}

} // namespace

SuiteReport run_suite(std::size_t n_max, std::size_t degree_samples, std::uint64_t seed) {
  if (n_max < 2) {
    throw DomainError("verification needs n_max >= 2");
  }
  if (n_max > kExhaustiveBound) {
    throw ResourceError("verification limited to n_max <= " + std::to_string(kExhaustiveBound));
  }
  std::mt19937_64 rng(seed);
  Registry reg;
  for (std::size_t n = 2; n <= n_max; ++n) {
    Context ctx;
    ctx.n = n;
    ctx.group = SymmetricGroup::get(n);
    ctx.trials = std::max<std::size_t>(degree_samples, 1);
    ctx.rng = &rng;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      ctx.patterns.push_back(lift(mask, n, rng));
    }
    ctx.all = ctx.patterns;
    for (std::size_t k = 0; k < degree_samples; ++k) {
      ctx.all.push_back(uniform_degrees(n, rng));
    }
    std::vector<Word> minwords;
    if (n <= kMinwordBound) {
      for (const auto& p : ctx.group->elements()) {
        minwords.push_back(shortest_word(p));
      }
    }
    check_kappa(reg, ctx, minwords);
    check_words(reg, ctx);
    check_morphism(reg, ctx);
    check_cohomology(reg, ctx);
  }
  if (n_max >= 5) {
    check_example(reg, degree_samples, rng);
  }
  SuiteReport report;
  report.checks = reg.take();
  report.seed = seed;
  report.n_min = 2;
  report.n_max = n_max;
  return report;
}

} // namespace koszul
